#pragma once

#include <utility>
#include <vector>

#include "ospchar/algebra.hpp"

namespace ospchar {

// Labels extended to the full index range. Even: Lambda_i for i <= h, 1/2 at
// the middle index when m is odd, 1 - Lambda_{m+1-i} beyond. Odd: Lambda_mu
// for mu <= k, m - Lambda_{n+1-mu} - 1 beyond; this odd extension is the one
// consistent with the root values below (the fixed point of the reflection
// rules), and the unified root formula then agrees with the case split.
struct ExtendedLabels {
    Signature sig;
    std::vector<Rat> even; // size m
    std::vector<Rat> odd;  // size n
};

ExtendedLabels extended_labels(const Weight& w);

// Characteristic roots, one per graded index:
//   alpha_Even(i) = L_i + m - i - n/2 - 1      (extended even labels L)
//   alpha_Odd(mu) = -L_mu + m - n + mu - 1     (extended odd labels L)
// Affine with slope +-1 (or 0 at the even middle index) in the plain labels.
struct CharRoots {
    Signature sig;
    std::vector<Rat> even; // size m
    std::vector<Rat> odd;  // size n

    const Rat& at(const Gi& g) const;
};

CharRoots characteristic_roots(const Weight& w);

// Same multiset except at the even middle index of odd m, which carries
// (m - n - 1)/2 instead of (m - n - 2)/2. This is the eigenvalue the realized
// characteristic matrix actually takes on the middle channel (the middle basis
// vector has zero weight, so the quadratic term drops out); the operator-level
// identities and projectors use these roots.
CharRoots casimir_difference_roots(const Weight& w);

// Roots of the containing algebra osp(m+1|n); plain alias with the parent
// signature made explicit at the call site.
CharRoots parent_roots(const Weight& parent_weight);

// All unordered index pairs whose roots coincide, each pair ordered and the
// list sorted; empty means the projections are well defined.
std::vector<std::pair<Gi, Gi>> degeneracy_report(const CharRoots& roots);

} // namespace ospchar
