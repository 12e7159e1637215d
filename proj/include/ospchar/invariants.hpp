#pragma once

#include <map>
#include <utility>

#include "ospchar/branching.hpp"

namespace ospchar {

// Closed-form containment invariants for one branching context. All direct
// evaluations use literal factor semantics: any vanishing denominator factor
// raises PoleError naming the factor, even when a matching numerator factor
// vanishes too. The one deliberate exception is omega, which evaluates mu_t
// first and short-circuits to zero when it vanishes; see omega() below.

// Squared reduced Wigner coefficient attached to the parent shift q. Defined
// for q in Itilde only; other indices raise DomainError.
Rat c_invariant(const BranchContext& ctx, const CIdx& q);

// Reduced matrix element attached to the child shift p in I.
Rat gamma_p(const BranchContext& ctx, const Gi& p);

// Doubly resolved reduced matrix element, p in I, s in Itilde.
Rat gamma_ps(const BranchContext& ctx, const Gi& p, const CIdx& s);

// Squared shift-operator norm for t in I. Identically zero for odd t, since
// the Itilde product contains beta_t - alpha_t = 0 on the I1 pattern.
Rat mu_t(const BranchContext& ctx, const Gi& t);

// Squared reduced Wigner coefficient for the double shift (s in Itilde,
// t in I). Proportional to mu_t; when mu_t evaluates to exactly zero the
// result is zero for every s without touching the remaining factors (the
// s = t denominator is identically singular on the I1 pattern, and the
// zero is forced by the vanishing shift component).
Rat omega(const BranchContext& ctx, const CIdx& s, const Gi& t);

struct InvariantTable {
    std::map<CIdx, Rat> C;
    std::map<Gi, Rat> gamma;
    std::map<std::pair<Gi, CIdx>, Rat> gamma_s;
    std::map<Gi, Rat> mu;
    std::map<std::pair<CIdx, Gi>, Rat> omega;
};

// All invariants of one context, direct evaluation; PoleError propagates.
InvariantTable invariant_table(const BranchContext& ctx);

enum class InvariantKind { C, GammaP, GammaPS, Mu, Omega };

// first: q for C, p for GammaP/GammaPS, t for Mu, s for Omega.
// second: s for GammaPS, t for Omega; ignored otherwise.
struct InvariantSelector {
    InvariantKind kind;
    CIdx first;
    CIdx second;
};

// A deformation direction whose label entries are distinct powers of two,
// giving every characteristic root a distinct slope; separates any root
// collision that is not forced by the I1 pattern itself.
Weight canonical_direction(const Signature& parent_sig);

// Evaluates the selected invariant along Lambda + t*eta: each factor becomes
// affine in t, the factor products become one rational function, numerator
// and denominator are reduced by their gcd, and the result is read off at
// t = 0. eta is parent-shaped; the child weight moves by the first h_child
// even entries and the full odd part, which keeps the I1 pattern (and hence
// the index sets of ctx) intact. Raises DegenerateDirection when a
// denominator factor vanishes identically along the direction, PoleError
// when the reduced denominator still vanishes at t = 0.
Rat evaluate_with_limit(const InvariantSelector& sel, const BranchContext& ctx,
                        const Weight& eta);

} // namespace ospchar
