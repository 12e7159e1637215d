#include "doctest.h"
#include "ospchar/errors.hpp"
#include "ospchar/invariants.hpp"

using namespace ospchar;

namespace {

Weight make_weight(const Signature& sig, std::vector<Rat> even, std::vector<Rat> odd) {
    Weight w = Weight::zero(sig);
    w.even = std::move(even);
    w.odd = std::move(odd);
    w.validate_shape();
    return w;
}

BranchContext context(int m, int n, std::vector<Rat> pe, std::vector<Rat> po,
                      std::vector<Rat> ce, std::vector<Rat> co) {
    const Weight parent = make_weight(Signature{m, n}, std::move(pe), std::move(po));
    const Weight child = make_weight(Signature{m - 1, n}, std::move(ce), std::move(co));
    return index_sets(parent, child);
}

} // namespace

TEST_CASE("rank-one fixture: both odd labels 1") {
    const BranchContext ctx = context(1, 2, {}, {Rat(1)}, {}, {Rat(1)});
    const InvariantTable t = invariant_table(ctx);
    CHECK(t.C.at(CIdx::zero()) == Rat(3, 5));
    CHECK(t.C.at(CIdx::of(Gi::odd(2))) == Rat(2, 5));
    CHECK(t.gamma.at(Gi::odd(2)) == Rat(3, 2));
    CHECK(t.gamma_s.at({Gi::odd(2), CIdx::zero()}) == Rat(-1));
    CHECK(t.gamma_s.at({Gi::odd(2), CIdx::of(Gi::odd(2))}) == Rat(3, 2));
    CHECK(t.mu.at(Gi::odd(2)) == Rat(0));
    CHECK(t.omega.at({CIdx::zero(), Gi::odd(2)}) == Rat(0));
    CHECK(t.omega.at({CIdx::of(Gi::odd(2)), Gi::odd(2)}) == Rat(0));

    // Individual evaluators agree with the table.
    CHECK(c_invariant(ctx, CIdx::zero()) == Rat(3, 5));
    CHECK(gamma_p(ctx, Gi::odd(2)) == Rat(3, 2));
    CHECK(gamma_ps(ctx, Gi::odd(2), CIdx::zero()) == Rat(-1));
    CHECK(mu_t(ctx, Gi::odd(2)) == Rat(0));
    CHECK(omega(ctx, CIdx::zero(), Gi::odd(2)) == Rat(0));
}

TEST_CASE("rank-one fixture: child label lowered") {
    const BranchContext ctx = context(1, 2, {}, {Rat(1)}, {}, {Rat(0)});
    const InvariantTable t = invariant_table(ctx);
    CHECK(t.C.at(CIdx::zero()) == Rat(3));
    CHECK(t.C.at(CIdx::of(Gi::odd(1))) == Rat(-2));
    CHECK(t.gamma.at(Gi::odd(1)) == Rat(-3, 2));
}

TEST_CASE("selector domain errors") {
    const BranchContext ctx = context(1, 2, {}, {Rat(1)}, {}, {Rat(1)});
    CHECK_THROWS_AS(c_invariant(ctx, CIdx::of(Gi::odd(1))), DomainError); // O1 not in Itilde
    CHECK_THROWS_AS(gamma_p(ctx, Gi::odd(1)), DomainError);
    CHECK_THROWS_AS(mu_t(ctx, Gi::odd(1)), DomainError);
    CHECK_THROWS_AS(omega(ctx, CIdx::of(Gi::odd(1)), Gi::odd(2)), DomainError);
    CHECK_THROWS_AS(omega(ctx, CIdx::zero(), Gi::odd(1)), DomainError);
}

TEST_CASE("sum rules and vanishing patterns over a grid") {
    int contexts = 0;
    int nonzero_mu_rows = 0;
    for (int m : {1, 2, 3})
        for (int n : {2, 4}) {
            const Signature parent_sig{m, n};
            const Signature child_sig{m - 1, n};
            Weight parent = Weight::zero(parent_sig);
            for (size_t i = 0; i < parent.even.size(); ++i) parent.even[i] = Rat(7 - 2 * static_cast<long>(i));
            for (size_t i = 0; i < parent.odd.size(); ++i) parent.odd[i] = Rat(5 - 2 * static_cast<long>(i));
            for (const Weight& child : branch_enumerate(parent, child_sig)) {
                const BranchContext ctx = index_sets(parent, child);
                InvariantTable t;
                try {
                    t = invariant_table(ctx);
                } catch (const PoleError&) {
                    continue;
                }
                ++contexts;

                Rat csum;
                for (const auto& [q, v] : t.C) csum += v;
                CHECK(csum == Rat(1));

                for (const Gi& p : ctx.I) {
                    Rat dot;
                    for (const CIdx& s : ctx.Itilde) dot += t.gamma_s.at({p, s}) * t.C.at(s);
                    CHECK(dot == Rat(0));
                }

                for (const Gi& tt : ctx.I) {
                    if (tt.is_odd()) CHECK(t.mu.at(tt) == Rat(0));
                    if (t.mu.at(tt) == Rat(0)) {
                        for (const CIdx& s : ctx.Itilde) CHECK(t.omega.at({s, tt}) == Rat(0));
                    } else {
                        ++nonzero_mu_rows;
                        Rat wsum;
                        for (const CIdx& s : ctx.Itilde) wsum += t.omega.at({s, tt});
                        CHECK(wsum == Rat(1));
                    }
                }
            }
        }
    CHECK(contexts >= 20);
    CHECK(nonzero_mu_rows >= 10);
}

TEST_CASE("direct evaluation reports the vanishing factor") {
    // Parent root collision: the added index and the first even index share a root.
    const BranchContext ctx = context(2, 2, {Rat(0)}, {Rat(1)}, {}, {Rat(1)});
    CHECK_THROWS_AS(invariant_table(ctx), PoleError);
    CHECK_THROWS_WITH_AS(c_invariant(ctx, CIdx::zero()),
                         doctest::Contains("beta(0)-beta(E1)"), PoleError);
}

TEST_CASE("limit evaluation rescues removable poles") {
    const Weight eta2 = canonical_direction(Signature{2, 2});
    {
        const BranchContext ctx = context(2, 2, {Rat(0)}, {Rat(1)}, {}, {Rat(1)});
        CHECK(evaluate_with_limit({InvariantKind::C, CIdx::of(Gi::odd(2)), {}}, ctx, eta2) == Rat(5, 8));
        CHECK(evaluate_with_limit({InvariantKind::GammaP, CIdx::of(Gi::even(1)), {}}, ctx, eta2) == Rat(-5, 12));
        CHECK(evaluate_with_limit({InvariantKind::GammaP, CIdx::of(Gi::odd(2)), {}}, ctx, eta2) == Rat(2, 3));
        // A genuinely divergent entry still reports a pole.
        CHECK_THROWS_AS(evaluate_with_limit({InvariantKind::C, CIdx::zero(), {}}, ctx, eta2), PoleError);
    }
    {
        const BranchContext ctx = context(2, 2, {Rat(0)}, {Rat(1)}, {}, {Rat(0)});
        CHECK(evaluate_with_limit({InvariantKind::GammaP, CIdx::of(Gi::even(1)), {}}, ctx, eta2) == Rat(1, 4));
        CHECK(evaluate_with_limit({InvariantKind::GammaP, CIdx::of(Gi::odd(1)), {}}, ctx, eta2) == Rat(-2));
    }
    {
        // Child root collision in the defining-type module of the rank-two parent.
        const BranchContext ctx = context(3, 2, {Rat(0)}, {Rat(1)}, {Rat(0)}, {Rat(1)});
        const Weight eta3 = canonical_direction(Signature{3, 2});
        CHECK_THROWS_AS(invariant_table(ctx), PoleError);
        CHECK(evaluate_with_limit({InvariantKind::C, CIdx::zero(), {}}, ctx, eta3) == Rat(0));
        CHECK(evaluate_with_limit({InvariantKind::C, CIdx::of(Gi::even(1)), {}}, ctx, eta3) == Rat(-1, 3));
        CHECK(evaluate_with_limit({InvariantKind::C, CIdx::of(Gi::even(2)), {}}, ctx, eta3) == Rat(1));
        CHECK(evaluate_with_limit({InvariantKind::C, CIdx::of(Gi::odd(2)), {}}, ctx, eta3) == Rat(1, 3));
        CHECK(evaluate_with_limit({InvariantKind::GammaP, CIdx::of(Gi::even(1)), {}}, ctx, eta3) == Rat(0));
        // A factor constant in the deformation parameter cannot be separated.
        CHECK_THROWS_AS(evaluate_with_limit({InvariantKind::GammaPS, CIdx::of(Gi::even(1)), CIdx::zero()}, ctx, eta3),
                        DegenerateDirection);
    }
}

TEST_CASE("limit evaluation matches direct evaluation away from poles") {
    for (int m : {1, 2})
        for (int n : {2, 4}) {
            const Signature parent_sig{m, n};
            Weight parent = Weight::zero(parent_sig);
            for (size_t i = 0; i < parent.even.size(); ++i) parent.even[i] = Rat(9);
            for (size_t i = 0; i < parent.odd.size(); ++i) parent.odd[i] = Rat(6 - 2 * static_cast<long>(i));
            const Weight eta = canonical_direction(parent_sig);
            for (const Weight& child : branch_enumerate(parent, Signature{m - 1, n})) {
                const BranchContext ctx = index_sets(parent, child);
                InvariantTable t;
                try {
                    t = invariant_table(ctx);
                } catch (const PoleError&) {
                    continue;
                }
                for (const CIdx& q : ctx.Itilde)
                    CHECK(evaluate_with_limit({InvariantKind::C, q, {}}, ctx, eta) == t.C.at(q));
                for (const Gi& p : ctx.I) {
                    CHECK(evaluate_with_limit({InvariantKind::GammaP, CIdx::of(p), {}}, ctx, eta) == t.gamma.at(p));
                    CHECK(evaluate_with_limit({InvariantKind::Mu, CIdx::of(p), {}}, ctx, eta) == t.mu.at(p));
                    for (const CIdx& s : ctx.Itilde) {
                        CHECK(evaluate_with_limit({InvariantKind::GammaPS, CIdx::of(p), s}, ctx, eta) ==
                              t.gamma_s.at({p, s}));
                        CHECK(evaluate_with_limit({InvariantKind::Omega, s, CIdx::of(p)}, ctx, eta) ==
                              t.omega.at({s, p}));
                    }
                }
            }
        }
}
