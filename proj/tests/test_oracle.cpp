#include <algorithm>

#include "doctest.h"
#include "ospchar/errors.hpp"
#include "ospchar/invariants.hpp"
#include "ospchar/oracle.hpp"

using namespace ospchar;

namespace {

Weight make_weight(const Signature& sig, std::vector<Rat> even, std::vector<Rat> odd) {
    Weight w = Weight::zero(sig);
    w.even = std::move(even);
    w.odd = std::move(odd);
    w.validate_shape();
    return w;
}

Weight defining_weight(const Signature& sig) {
    Weight w = Weight::zero(sig);
    w.odd[0] = Rat(1);
    return w;
}

const CheckItem& find_item(const CheckReport& rep, const std::string& name) {
    for (const CheckItem& it : rep.items)
        if (it.name == name) return it;
    static CheckItem missing;
    REQUIRE_MESSAGE(false, "missing item ", name);
    return missing;
}

} // namespace

TEST_CASE("exact linear solver") {
    {
        RatMat a = rat_zero(2, 2);
        a(0, 0) = Rat(1, 2);
        a(0, 1) = Rat(1, 3);
        a(1, 0) = Rat(1, 4);
        a(1, 1) = Rat(1);
        const auto x = bareiss_solve(a, {Rat(7, 6), Rat(3, 2)});
        CHECK(x == std::vector<Rat>{Rat(8, 5), Rat(11, 10)});
    }
    {
        RatMat a = rat_zero(2, 2); // pivoting required
        a(0, 1) = Rat(1);
        a(1, 0) = Rat(1);
        const auto x = bareiss_solve(a, {Rat(5), Rat(7)});
        CHECK(x == std::vector<Rat>{Rat(7), Rat(5)});
    }
    {
        RatMat a = rat_zero(2, 2);
        a(0, 0) = Rat(1);
        a(0, 1) = Rat(2);
        a(1, 0) = Rat(2);
        a(1, 1) = Rat(4);
        CHECK_THROWS_AS(bareiss_solve(a, {Rat(1), Rat(1)}), SingularSystem);
    }
    {
        RatMat a = rat_zero(4, 4); // verify A x = b on a dense rational matrix
        std::vector<Rat> b(4);
        long v = 3;
        for (int i = 0; i < 4; ++i) {
            b[static_cast<size_t>(i)] = Rat(v++, 7);
            for (int j = 0; j < 4; ++j) a(i, j) = Rat((v * v) % 11 - 5, 1 + (v++ % 3));
        }
        const auto x = bareiss_solve(a, b);
        for (int i = 0; i < 4; ++i) {
            Rat dot;
            for (int j = 0; j < 4; ++j) dot += a(i, j) * x[static_cast<size_t>(j)];
            CHECK(dot == b[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("minimal polynomial fixtures") {
    CHECK(minimal_polynomial(rat_zero(3, 3)).c == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(minimal_polynomial(rat_identity(3)).c == std::vector<Rat>{Rat(-1), Rat(1)});
    {
        RatMat d = rat_zero(3, 3);
        d(0, 0) = Rat(1);
        d(1, 1) = Rat(2);
        d(2, 2) = Rat(2);
        CHECK(minimal_polynomial(d).c == std::vector<Rat>{Rat(2), Rat(-3), Rat(1)});
    }
    {
        RatMat nil = rat_zero(2, 2);
        nil(0, 1) = Rat(1);
        CHECK(minimal_polynomial(nil).c == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    }
    {
        RatMat d = rat_zero(2, 2);
        d(0, 0) = Rat(1);
        d(1, 1) = Rat(2);
        RatMat e = rat_zero(2, 2);
        e(0, 0) = Rat(1);
        CHECK(minimal_polynomial_on(d, e).c == std::vector<Rat>{Rat(-1), Rat(1)});
    }
}

TEST_CASE("defining tensor square minimal polynomials") {
    struct Fixture {
        int m, n;
        std::vector<Rat> coeffs;
    };
    const Fixture fixtures[] = {
        {0, 2, {Rat(-3), Rat(2), Rat(1)}},           // (x+3)(x-1)
        {1, 2, {Rat(-2), Rat(-1), Rat(2), Rat(1)}},  // (x+2)(x+1)(x-1)
        {2, 2, {Rat(-1), Rat(-1), Rat(1), Rat(1)}},  // (x+1)^2(x-1)
        {3, 2, {Rat(0), Rat(-1), Rat(0), Rat(1)}},   // x(x-1)(x+1)
        {1, 4, {Rat(-4), Rat(-1), Rat(4), Rat(1)}},  // (x+4)(x-1)(x+1)
    };
    for (const Fixture& f : fixtures) {
        const Signature sig{f.m, f.n};
        const RatMat a = characteristic_matrix(defining_realization(sig));
        const Poly p = minimal_polynomial(a);
        INFO(f.m, "|", f.n);
        CHECK(p.c == f.coeffs);

        // The minimal polynomial divides the operator-root product.
        Poly prod = Poly::constant(Rat(1));
        const CharRoots roots = casimir_difference_roots(defining_weight(sig));
        for (const Gi& g : all_indices(sig)) prod = prod * Poly::linear(-roots.at(g), Rat(1));
        Poly quo, rem;
        poly_divrem(prod, p, quo, rem);
        CHECK(rem.is_zero());
    }
}

TEST_CASE("linear systems reproduce the fixture tables") {
    const BranchContext ctx =
        index_sets(make_weight(Signature{1, 2}, {}, {Rat(1)}), make_weight(Signature{0, 2}, {}, {Rat(1)}));
    const auto c = solve_c_system(ctx);
    CHECK(c.at(CIdx::zero()) == Rat(3, 5));
    CHECK(c.at(CIdx::of(Gi::odd(2))) == Rat(2, 5));
    const auto g = solve_gamma_system(ctx, Gi::odd(2));
    CHECK(g.at(CIdx::zero()) == Rat(-1));
    CHECK(g.at(CIdx::of(Gi::odd(2))) == Rat(3, 2));
}

TEST_CASE("linear systems agree with the closed forms on a grid") {
    int compared = 0;
    for (int m : {1, 2, 3})
        for (int n : {2, 4}) {
            const Signature parent_sig{m, n};
            Weight parent = Weight::zero(parent_sig);
            for (size_t i = 0; i < parent.even.size(); ++i) parent.even[i] = Rat(7 - 2 * static_cast<long>(i));
            for (size_t i = 0; i < parent.odd.size(); ++i) parent.odd[i] = Rat(5 - 2 * static_cast<long>(i));
            for (const Weight& child : branch_enumerate(parent, Signature{m - 1, n})) {
                const BranchContext ctx = index_sets(parent, child);
                std::map<CIdx, Rat> c_sys;
                try {
                    c_sys = solve_c_system(ctx);
                } catch (const SingularSystem&) {
                    continue;
                }
                InvariantTable table;
                try {
                    table = invariant_table(ctx);
                } catch (const PoleError&) {
                    continue;
                }
                ++compared;
                for (const CIdx& q : ctx.Itilde) CHECK(c_sys.at(q) == table.C.at(q));
                for (const Gi& p : ctx.I) {
                    const auto g_sys = solve_gamma_system(ctx, p);
                    for (const CIdx& s : ctx.Itilde) CHECK(g_sys.at(s) == table.gamma_s.at({p, s}));
                }
            }
        }
    CHECK(compared >= 20);
}

TEST_CASE("degenerate contexts make the system singular") {
    const BranchContext ctx =
        index_sets(make_weight(Signature{2, 2}, {Rat(0)}, {Rat(1)}), make_weight(Signature{1, 2}, {}, {Rat(1)}));
    CHECK_THROWS_AS(solve_c_system(ctx), SingularSystem);
}

TEST_CASE("operator check on the rank-one branching") {
    const ParentEmbedding emb = embed_parent(Signature{0, 2});
    const BranchContext ctx =
        index_sets(make_weight(Signature{1, 2}, {}, {Rat(1)}), make_weight(Signature{0, 2}, {}, {Rat(1)}));
    const CheckReport rep = operator_invariant_check(emb, ctx);
    CHECK(rep.all_ok());
    CHECK(rep.count(CheckStatus::Match) == 5);
    CHECK(rep.count(CheckStatus::Skipped) == 1);
    CHECK(rep.count(CheckStatus::Mismatch) == 0);
    CHECK(find_item(rep, "C[0]").status == CheckStatus::Match);
    CHECK(find_item(rep, "C[O2]").status == CheckStatus::Match);
    CHECK(find_item(rep, "gamma[O2]").status == CheckStatus::Match);
    CHECK(find_item(rep, "omega[0,O2]").status == CheckStatus::Match);
    CHECK(find_item(rep, "mu[O2]").status == CheckStatus::Match);
    CHECK(find_item(rep, "omega[O2,O2]").status == CheckStatus::Skipped);
    CHECK(rep.summary() == "5 match / 1 skipped / 0 mismatch");
}

TEST_CASE("operator check on the rank-two defining branching") {
    const ParentEmbedding emb = embed_parent(Signature{2, 2});
    const BranchContext ctx = index_sets(make_weight(Signature{3, 2}, {Rat(0)}, {Rat(1)}),
                                         make_weight(Signature{2, 2}, {Rat(0)}, {Rat(1)}));
    const CheckReport rep = operator_invariant_check(emb, ctx);
    CHECK(rep.all_ok());
    CHECK(rep.count(CheckStatus::Match) == 6);
    CHECK(rep.count(CheckStatus::Skipped) == 16);
    CHECK(rep.count(CheckStatus::Mismatch) == 0);
    // Annihilated shift components adjudicate the vanishing norms.
    CHECK(find_item(rep, "mu[E1]").status == CheckStatus::Match);
    CHECK(find_item(rep, "mu[E1]").note == "shift component annihilated, mu = 0");
    CHECK(find_item(rep, "mu[E2]").status == CheckStatus::Match);
    // A vanishing resolvent row adjudicates the non-annihilated zero norm.
    CHECK(find_item(rep, "mu[O2]").note == "resolvent row vanishes, mu = 0");
    CHECK(find_item(rep, "C[E2]").status == CheckStatus::Match);
    CHECK(find_item(rep, "omega[E2,O2]").status == CheckStatus::Match);
    CHECK(find_item(rep, "gamma[E1]").status == CheckStatus::Skipped);
}

TEST_CASE("operator check validates its inputs") {
    const ParentEmbedding emb = embed_parent(Signature{0, 2});
    // Parent weight must be the defining weight of the embedded parent.
    const BranchContext bad =
        index_sets(make_weight(Signature{1, 2}, {}, {Rat(2)}), make_weight(Signature{0, 2}, {}, {Rat(2)}));
    CHECK_THROWS_AS(operator_invariant_check(emb, bad), DomainError);
    // Signature mismatch between embedding and context.
    const ParentEmbedding other = embed_parent(Signature{1, 2});
    const BranchContext good =
        index_sets(make_weight(Signature{1, 2}, {}, {Rat(1)}), make_weight(Signature{0, 2}, {}, {Rat(1)}));
    CHECK_THROWS_AS(operator_invariant_check(other, good), DomainError);
}

TEST_CASE("cross-validation suite stays green on small parents") {
    for (int m : {1, 2, 3}) {
        const auto checks = oracle_suite(Signature{m, 2});
        CHECK(!checks.empty());
        for (const auto& c : checks) {
            INFO(m, "|2 ", c.name, " ", c.detail);
            CHECK(c.pass);
        }
    }
    CHECK_THROWS_AS(oracle_suite(Signature{0, 2}), DomainError);
}
