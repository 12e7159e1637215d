#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ospchar/errors.hpp"
#include "ospchar/rational.hpp"

namespace ospchar {

// Algebra signature for osp(m|n): m even dimensions, n = 2k odd dimensions.
// n must be a positive even integer; m >= 0.
struct Signature {
    int m = 0;
    int n = 2;

    int h() const { return m / 2; }
    int k() const { return n / 2; }
    bool odd_m() const { return (m % 2) != 0; }
    int dim() const { return m + n; }

    void validate() const {
        if (m < 0) throw DomainError("signature: m must be >= 0");
        if (n < 2 || (n % 2) != 0) throw DomainError("signature: n must be even and >= 2");
    }

    friend bool operator==(const Signature&, const Signature&) = default;
};

enum class Parity { Even = 0, Odd = 1 };

// Graded index into the standard basis: Even(i) with 1 <= i <= m, or
// Odd(mu) with 1 <= mu <= n. Ordered even-before-odd, then by position.
struct Gi {
    Parity par = Parity::Even;
    int pos = 1;

    static Gi even(int i) { return Gi{Parity::Even, i}; }
    static Gi odd(int mu) { return Gi{Parity::Odd, mu}; }

    bool is_even() const { return par == Parity::Even; }
    bool is_odd() const { return par == Parity::Odd; }

    friend bool operator==(const Gi&, const Gi&) = default;
    friend std::strong_ordering operator<=>(const Gi& a, const Gi& b) {
        if (a.par != b.par) return a.par == Parity::Even ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.pos <=> b.pos;
    }

    std::string to_string() const { return (is_even() ? "E" : "O") + std::to_string(pos); }
};

// Grading (p): 0 for even indices, 1 for odd.
inline int parity_of(const Gi& g) { return g.is_even() ? 0 : 1; }

// theta_p: +1 on even indices; +1 for odd mu <= k, -1 for mu > k.
int theta(const Gi& g, const Signature& sig);

// bar: reflection within each block, i -> m+1-i, mu -> n+1-mu.
Gi bar(const Gi& g, const Signature& sig);

// tilde: identity on even indices, bar on odd. Satisfies
// theta_p * theta_{tilde p} = (-1)^{(p)}.
Gi tilde(const Gi& g, const Signature& sig);

// Flat 0-based position in the standard basis: even i -> i-1, odd mu -> m+mu-1.
int flat(const Gi& g, const Signature& sig);
Gi from_flat(int idx, const Signature& sig);
std::vector<Gi> all_indices(const Signature& sig);

void validate_index(const Gi& g, const Signature& sig);

// Basis convention for the root data. Distinguished applies to m = 2 only.
enum class Convention { Canonical, Distinguished };

// Highest weight: h = floor(m/2) even labels and k = n/2 odd labels, exact
// rationals. Text form "even:a1,a2;odd:b1,b2" with reduced "p/q" entries.
struct Weight {
    Signature sig;
    std::vector<Rat> even;
    std::vector<Rat> odd;

    static Weight zero(const Signature& s) {
        Weight w;
        w.sig = s;
        w.even.assign(static_cast<size_t>(s.h()), Rat(0));
        w.odd.assign(static_cast<size_t>(s.k()), Rat(0));
        return w;
    }

    void validate_shape() const;

    friend bool operator==(const Weight&, const Weight&) = default;
};

Weight parse_weight(const std::string& text, const Signature& sig);
std::string format_weight(const Weight& w);

// Lexicographic order on (even labels, odd labels); used for deterministic
// listings of branching results.
bool weight_less(const Weight& a, const Weight& b);

// Invariant bilinear form on weights: (eps_i, eps_j) = delta_ij,
// (delta_mu, delta_nu) = -delta_munu, mixed products zero.
Rat bilinear_form(const Weight& u, const Weight& v);

// Half-sum data. Canonical: rho_i = (m-2i)/2, rho_mu = (n-m-2mu+2)/2.
// Distinguished (m = 2 only): rho_eps = -n/2, rho_mu = (n-2mu+2)/2.
Weight rho(const Signature& sig, Convention conv = Convention::Canonical);

// Quadratic Casimir eigenvalue (Lambda, Lambda + 2 rho). Evaluates the form
// on any labels of the right shape; no dominance check.
Rat casimir_eigenvalue(const Weight& w, Convention conv = Convention::Canonical);

enum class WeightClass { Tensor, Spinor };

// Checks dominance/integrality and classifies. Throws DomainError when the
// labels are not an admissible highest weight:
//  - odd labels: integers with Lambda_1 >= ... >= Lambda_k >= 0;
//  - even labels, m >= 3: Lambda_1 >= ... >= Lambda_h >= 0 (m odd) or
//    Lambda_1 >= ... >= Lambda_{h-1} >= |Lambda_h| (m even), all labels
//    integers (tensor) or all half-odd (spinor);
//  - m = 2: the single even label may be any rational (spinor iff half-odd);
//  - m <= 1: no even labels.
WeightClass validate_dominant(const Weight& w);

// Weight of the j-th standard basis vector of the vector module, as a label
// vector: Even(i) -> +eps_i for i <= h, 0 for the middle index (odd m),
// -eps_{m+1-i} for i > ceil(m/2); Odd(mu) -> +delta_mu (mu <= k), else
// -delta_{n+1-mu}. Used to step weights by one defining-module weight.
Weight basis_vector_weight(const Gi& g, const Signature& sig);

Weight weight_sum(const Weight& a, const Weight& b);
Weight weight_scale(const Weight& a, const Rat& s);

} // namespace ospchar
