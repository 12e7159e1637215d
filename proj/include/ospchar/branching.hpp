#pragma once

#include <string>
#include <vector>

#include "ospchar/char_roots.hpp"

namespace ospchar {

// Index into the extended set used for containment data: either the added
// even index of the containing algebra (rendered "0") or a graded index of
// the subalgebra. The added index sits first among the even positions, so
// "0" maps to parent Even(1) and child Even(i) to parent Even(i+1); odd
// indices line up unchanged.
struct CIdx {
    bool added = false;
    Gi g;

    static CIdx zero() { return CIdx{true, Gi::even(1)}; }
    static CIdx of(const Gi& gi) { return CIdx{false, gi}; }

    friend bool operator==(const CIdx&, const CIdx&) = default;
    friend std::strong_ordering operator<=>(const CIdx& a, const CIdx& b) {
        if (a.added != b.added) return a.added ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.added) return std::strong_ordering::equal;
        return a.g <=> b.g;
    }

    std::string to_string() const { return added ? "0" : g.to_string(); }
};

// True when (parent_weight, child_weight) is an allowed osp(m+1|n) -> osp(m|n)
// restriction step: per-odd-label betweenness Lt_mu >= L_mu >= Lt_mu - 1 and
// even interlacing with integer differences (no even conditions for child
// m <= 1). Both weights must be dominant.
bool validate_branch_pair(const Weight& parent_weight, const Weight& child_weight);

// All child highest weights allowed under the parent weight, sorted by label
// lexicographic order, duplicate-free.
std::vector<Weight> branch_enumerate(const Weight& parent_weight, const Signature& child_sig);

// Containment data for one (parent weight, child weight) pair.
//   I0    : all child even indices
//   I1    : odd indices with beta = alpha (mu when Lt_mu = L_mu + 1, else mu-bar)
//   I1bar : the complementary odd indices (beta = 1 + alpha there)
//   I     : I0 union I1;  Itilde : {0} union I
struct BranchContext {
    Signature parent_sig;
    Signature child_sig;
    Weight parent_weight;
    Weight child_weight;
    CharRoots alpha; // child roots
    CharRoots beta;  // parent roots, parent indexing
    std::vector<Gi> I0, I1, I1bar, I;
    std::vector<CIdx> Itilde;

    const Rat& alpha_at(const Gi& g) const { return alpha.at(g); }
    Rat beta_at(const CIdx& q) const;
    bool in_I1(const Gi& g) const;
    bool in_I(const Gi& g) const;
    // The even-middle correction indicator: 1 exactly at the child middle
    // index Even(h+1) when the child m is odd.
    bool middle(const Gi& g) const {
        return child_sig.odd_m() && g.is_even() && g.pos == child_sig.h() + 1;
    }
    Gi bar_child(const Gi& g) const { return bar(g, child_sig); }
    std::string describe() const;
};

BranchContext index_sets(const Weight& parent_weight, const Weight& child_weight);

// Graded index of an extended index on the parent side ("0" -> Even(1),
// child Even(i) -> Even(i+1), odd unchanged).
Gi parent_index(const CIdx& q);

} // namespace ospchar
