#include <algorithm>
#include <set>

#include "doctest.h"
#include "ospchar/branching.hpp"
#include "ospchar/errors.hpp"

using namespace ospchar;

namespace {

Weight make_weight(const Signature& sig, std::vector<Rat> even, std::vector<Rat> odd) {
    Weight w = Weight::zero(sig);
    w.even = std::move(even);
    w.odd = std::move(odd);
    w.validate_shape();
    return w;
}

} // namespace

TEST_CASE("child enumeration fixtures") {
    {
        const Weight parent = make_weight(Signature{3, 2}, {Rat(1)}, {Rat(2)});
        const auto kids = branch_enumerate(parent, Signature{2, 2});
        REQUIRE(kids.size() == 6);
        const char* expected[] = {"even:-1;odd:1", "even:-1;odd:2", "even:0;odd:1",
                                  "even:0;odd:2",  "even:1;odd:1",  "even:1;odd:2"};
        for (size_t i = 0; i < 6; ++i) CHECK(format_weight(kids[i]) == expected[i]);
    }
    {
        const Weight parent = make_weight(Signature{1, 2}, {}, {Rat(1)});
        const auto kids = branch_enumerate(parent, Signature{0, 2});
        REQUIRE(kids.size() == 2);
        CHECK(format_weight(kids[0]) == "even:;odd:0");
        CHECK(format_weight(kids[1]) == "even:;odd:1");
    }
    {
        const auto kids = branch_enumerate(Weight::zero(Signature{1, 2}), Signature{0, 2});
        REQUIRE(kids.size() == 1);
        CHECK(kids[0] == Weight::zero(Signature{0, 2}));
    }
    {
        const Weight parent = make_weight(Signature{4, 4}, {Rat(2), Rat(1)}, {Rat(2), Rat(1)});
        const auto kids = branch_enumerate(parent, Signature{3, 4});
        CHECK(kids.size() == 8); // even label in {1,2}, odd pair in {2,1}x{1,0}
    }
}

TEST_CASE("enumeration is sorted and duplicate-free and agrees with the pair test") {
    const Signature parent_sig{3, 4};
    const Signature child_sig{2, 4};
    const Weight parent = make_weight(parent_sig, {Rat(2)}, {Rat(2), Rat(1)});
    const auto kids = branch_enumerate(parent, child_sig);
    CHECK(!kids.empty());
    for (size_t i = 0; i + 1 < kids.size(); ++i) {
        CHECK(weight_less(kids[i], kids[i + 1]));
        CHECK(!(kids[i] == kids[i + 1]));
    }
    for (const Weight& c : kids) CHECK(validate_branch_pair(parent, c));

    // Exhaustive box around the parent labels: membership in the enumeration
    // must coincide with the pairwise test.
    int found = 0;
    for (long e = -3; e <= 3; ++e)
        for (long o1 = 0; o1 <= 3; ++o1)
            for (long o2 = 0; o2 <= 3; ++o2) {
                Weight cand = make_weight(child_sig, {Rat(e)}, {Rat(o1), Rat(o2)});
                bool dominant = true;
                try {
                    validate_dominant(cand);
                } catch (const DomainError&) {
                    dominant = false;
                }
                if (!dominant) continue;
                const bool allowed = validate_branch_pair(parent, cand);
                const bool listed = std::find(kids.begin(), kids.end(), cand) != kids.end();
                CHECK(allowed == listed);
                if (listed) ++found;
            }
    CHECK(found == static_cast<int>(kids.size()));
}

TEST_CASE("pair validation rejections") {
    const Signature p3{3, 2}, c2{2, 2};
    const Weight parent = make_weight(p3, {Rat(1)}, {Rat(2)});
    // Even label outside the interlacing window.
    CHECK(!validate_branch_pair(parent, make_weight(c2, {Rat(2)}, {Rat(2)})));
    CHECK(!validate_branch_pair(parent, make_weight(c2, {Rat(-2)}, {Rat(2)})));
    // Odd label outside [Lt-1, Lt].
    CHECK(!validate_branch_pair(parent, make_weight(c2, {Rat(1)}, {Rat(0)})));
    CHECK(!validate_branch_pair(parent, make_weight(c2, {Rat(1)}, {Rat(3)})));
    // Mixed integrality between parent and child even labels.
    CHECK(!validate_branch_pair(parent, make_weight(c2, {Rat(1, 2)}, {Rat(2)})));
    // Signature mismatches throw.
    CHECK_THROWS_AS(validate_branch_pair(parent, make_weight(Signature{2, 4}, {Rat(1)}, {Rat(2), Rat(1)})),
                    DomainError);
    CHECK_THROWS_AS(validate_branch_pair(parent, make_weight(Signature{1, 2}, {}, {Rat(2)})), DomainError);
    // Non-dominant parent throws rather than returning false.
    const Weight bad_parent = make_weight(p3, {Rat(1)}, {Rat(-1)});
    CHECK_THROWS_AS(validate_branch_pair(bad_parent, make_weight(c2, {Rat(1)}, {Rat(0)})), DomainError);
}

TEST_CASE("index set fixtures") {
    {
        // osp(1|2) over sp(2), both labels 1: the bar index carries beta = alpha.
        const Weight pt = make_weight(Signature{1, 2}, {}, {Rat(1)});
        const Weight ch = make_weight(Signature{0, 2}, {}, {Rat(1)});
        const BranchContext ctx = index_sets(pt, ch);
        CHECK(ctx.I0.empty());
        CHECK(ctx.I1 == std::vector<Gi>{Gi::odd(2)});
        CHECK(ctx.I1bar == std::vector<Gi>{Gi::odd(1)});
        CHECK(ctx.Itilde == std::vector<CIdx>{CIdx::zero(), CIdx::of(Gi::odd(2))});
    }
    {
        // Same parent, child label lowered by one: the unbarred index flips in.
        const Weight pt = make_weight(Signature{1, 2}, {}, {Rat(1)});
        const Weight ch = Weight::zero(Signature{0, 2});
        const BranchContext ctx = index_sets(pt, ch);
        CHECK(ctx.I1 == std::vector<Gi>{Gi::odd(1)});
        CHECK(ctx.I1bar == std::vector<Gi>{Gi::odd(2)});
    }
    {
        const Weight pt = make_weight(Signature{3, 2}, {Rat(1)}, {Rat(2)});
        const Weight ch = make_weight(Signature{2, 2}, {Rat(1)}, {Rat(2)});
        const BranchContext ctx = index_sets(pt, ch);
        CHECK(ctx.I0 == std::vector<Gi>{Gi::even(1), Gi::even(2)});
        CHECK(ctx.I1 == std::vector<Gi>{Gi::odd(2)});
        CHECK(ctx.I == std::vector<Gi>{Gi::even(1), Gi::even(2), Gi::odd(2)});
        CHECK(ctx.Itilde.size() == ctx.I.size() + 1);
        CHECK(ctx.Itilde[0] == CIdx::zero());
    }
}

TEST_CASE("index sets partition the odd range and beta carries the fixed offsets") {
    for (int m : {1, 2, 3, 4})
        for (int n : {2, 4}) {
            const Signature parent_sig{m, n};
            const Signature child_sig{m - 1, n};
            Weight parent = Weight::zero(parent_sig);
            for (size_t i = 0; i < parent.even.size(); ++i) parent.even[i] = Rat(6 - 2 * static_cast<long>(i));
            for (size_t i = 0; i < parent.odd.size(); ++i) parent.odd[i] = Rat(4 - static_cast<long>(i));
            for (const Weight& child : branch_enumerate(parent, child_sig)) {
                const BranchContext ctx = index_sets(parent, child);
                CHECK(ctx.I0.size() == static_cast<size_t>(child_sig.m));
                CHECK(ctx.I1.size() == static_cast<size_t>(child_sig.k()));
                CHECK(ctx.I1bar.size() == static_cast<size_t>(child_sig.k()));
                std::set<Gi> odd_union(ctx.I1.begin(), ctx.I1.end());
                odd_union.insert(ctx.I1bar.begin(), ctx.I1bar.end());
                CHECK(odd_union.size() == static_cast<size_t>(n));
                for (int mu = 1; mu <= child_sig.k(); ++mu) {
                    const bool front = ctx.in_I1(Gi::odd(mu));
                    const bool back = ctx.in_I1(Gi::odd(n + 1 - mu));
                    CHECK(front != back); // exactly one of each mirror pair
                }
                for (const Gi& g : ctx.I) CHECK(ctx.in_I(g));
                for (const Gi& g : ctx.I1) CHECK(ctx.beta_at(CIdx::of(g)) == ctx.alpha_at(g));
                for (const Gi& g : ctx.I1bar) CHECK(ctx.beta_at(CIdx::of(g)) == ctx.alpha_at(g) + Rat(1));
                CHECK(ctx.beta_at(CIdx::zero()) == ctx.beta.at(Gi::even(1)));
                CHECK(ctx.Itilde.size() == ctx.I.size() + 1);
                CHECK(std::is_sorted(ctx.I.begin(), ctx.I.end()));
                CHECK(std::is_sorted(ctx.Itilde.begin(), ctx.Itilde.end()));
            }
        }
}

TEST_CASE("parent index embedding") {
    CHECK(parent_index(CIdx::zero()) == Gi::even(1));
    CHECK(parent_index(CIdx::of(Gi::even(1))) == Gi::even(2));
    CHECK(parent_index(CIdx::of(Gi::even(3))) == Gi::even(4));
    CHECK(parent_index(CIdx::of(Gi::odd(2))) == Gi::odd(2));
    CHECK(CIdx::zero().to_string() == "0");
    CHECK(CIdx::of(Gi::even(2)).to_string() == "E2");
    CHECK(CIdx::of(Gi::odd(1)).to_string() == "O1");
}
