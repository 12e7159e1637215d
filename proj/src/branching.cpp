#include "ospchar/branching.hpp"

#include <algorithm>

namespace ospchar {

namespace {

void require_parent_child(const Signature& parent, const Signature& child) {
    parent.validate();
    child.validate();
    if (parent.n != child.n || parent.m != child.m + 1)
        throw DomainError("signatures must form an osp(m+1|n) > osp(m|n) pair");
}

} // namespace

bool validate_branch_pair(const Weight& parent_weight, const Weight& child_weight) {
    require_parent_child(parent_weight.sig, child_weight.sig);
    validate_dominant(parent_weight);
    try {
        validate_dominant(child_weight);
    } catch (const DomainError&) {
        return false;
    }

    // Odd part: Lt_mu >= L_mu >= Lt_mu - 1 for every mu.
    for (size_t mu = 0; mu < parent_weight.odd.size(); ++mu) {
        const Rat& lt = parent_weight.odd[mu];
        const Rat& l = child_weight.odd[mu];
        if (l > lt || l < lt - Rat(1)) return false;
    }

    const int cm = child_weight.sig.m;
    if (cm <= 1) return true; // no even conditions below o(2)

    const auto& pe = parent_weight.even; // h_parent labels
    const auto& ce = child_weight.even;  // h_child labels
    const int hc = child_weight.sig.h();
    // Same integrality class: differences must be integers.
    for (int i = 0; i < hc; ++i)
        if (!(pe[static_cast<size_t>(i)] - ce[static_cast<size_t>(i)]).is_integer()) return false;
    // Interlacing Lt_1 >= L_1 >= Lt_2 >= ... >= Lt_hc >= L_hc >= tail.
    for (int i = 0; i < hc; ++i) {
        if (ce[static_cast<size_t>(i)] > pe[static_cast<size_t>(i)]) return false;
        if (i + 1 < static_cast<int>(pe.size()) && ce[static_cast<size_t>(i)] < pe[static_cast<size_t>(i + 1)])
            return false;
    }
    if (child_weight.sig.odd_m()) {
        // parent m+1 = 2h+2 even: tail |Lt_{h+1}|
        if (ce.back() < pe.back().abs()) return false;
    } else {
        // parent m+1 = 2h+1 odd: tail -Lt_h
        if (ce.back() < -pe.back()) return false;
    }
    return true;
}

std::vector<Weight> branch_enumerate(const Weight& parent_weight, const Signature& child_sig) {
    require_parent_child(parent_weight.sig, child_sig);
    validate_dominant(parent_weight);

    // Candidate labels per slot; every allowed child differs from the bound
    // by an integer, so stepping by 1 inside the interval is exhaustive.
    std::vector<std::vector<Rat>> even_choices;
    const int hc = child_sig.h();
    const auto& pe = parent_weight.even;
    for (int i = 0; i < hc; ++i) {
        Rat hi = pe[static_cast<size_t>(i)];
        Rat lo;
        if (i + 1 < static_cast<int>(pe.size())) lo = pe[static_cast<size_t>(i + 1)];
        else lo = -pe[static_cast<size_t>(i)]; // child m = 2h, tail -Lt_h
        if (child_sig.odd_m() && i == hc - 1) lo = pe.back().abs();
        std::vector<Rat> vals;
        for (Rat v = hi; v >= lo; v -= Rat(1)) vals.push_back(v);
        even_choices.push_back(std::move(vals));
    }
    std::vector<std::vector<Rat>> odd_choices;
    for (const Rat& lt : parent_weight.odd) {
        std::vector<Rat> vals{lt, lt - Rat(1)};
        odd_choices.push_back(std::move(vals));
    }

    std::vector<Weight> out;
    std::vector<size_t> pick(even_choices.size() + odd_choices.size(), 0);
    const size_t slots = pick.size();
    while (true) {
        Weight w = Weight::zero(child_sig);
        for (size_t i = 0; i < even_choices.size(); ++i) w.even[i] = even_choices[i][pick[i]];
        for (size_t j = 0; j < odd_choices.size(); ++j)
            w.odd[j] = odd_choices[j][pick[even_choices.size() + j]];
        bool ok = true;
        try {
            validate_dominant(w);
        } catch (const DomainError&) {
            ok = false;
        }
        if (ok && validate_branch_pair(parent_weight, w)) out.push_back(std::move(w));

        size_t s = 0;
        for (; s < slots; ++s) {
            const size_t limit = s < even_choices.size() ? even_choices[s].size()
                                                         : odd_choices[s - even_choices.size()].size();
            if (++pick[s] < limit) break;
            pick[s] = 0;
        }
        if (s == slots) break;
    }

    std::sort(out.begin(), out.end(), weight_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Gi parent_index(const CIdx& q) {
    if (q.added) return Gi::even(1);
    if (q.g.is_even()) return Gi::even(q.g.pos + 1);
    return q.g;
}

Rat BranchContext::beta_at(const CIdx& q) const { return beta.at(parent_index(q)); }

bool BranchContext::in_I1(const Gi& g) const {
    return std::find(I1.begin(), I1.end(), g) != I1.end();
}

bool BranchContext::in_I(const Gi& g) const {
    return std::find(I.begin(), I.end(), g) != I.end();
}

std::string BranchContext::describe() const {
    return "osp(" + std::to_string(parent_sig.m) + "|" + std::to_string(parent_sig.n) + ") [" +
           format_weight(parent_weight) + "] > [" + format_weight(child_weight) + "]";
}

BranchContext index_sets(const Weight& parent_weight, const Weight& child_weight) {
    if (!validate_branch_pair(parent_weight, child_weight))
        throw DomainError("weights do not form an allowed restriction pair");

    BranchContext ctx;
    ctx.parent_sig = parent_weight.sig;
    ctx.child_sig = child_weight.sig;
    ctx.parent_weight = parent_weight;
    ctx.child_weight = child_weight;
    ctx.alpha = characteristic_roots(child_weight);
    ctx.beta = characteristic_roots(parent_weight);

    const int k = ctx.child_sig.k();
    const int n = ctx.child_sig.n;
    for (int i = 1; i <= ctx.child_sig.m; ++i) ctx.I0.push_back(Gi::even(i));
    for (int mu = 1; mu <= k; ++mu) {
        const Rat& lt = parent_weight.odd[static_cast<size_t>(mu - 1)];
        const Rat& l = child_weight.odd[static_cast<size_t>(mu - 1)];
        if (lt == l + Rat(1)) {
            ctx.I1.push_back(Gi::odd(mu));
            ctx.I1bar.push_back(Gi::odd(n + 1 - mu));
        } else {
            ctx.I1.push_back(Gi::odd(n + 1 - mu));
            ctx.I1bar.push_back(Gi::odd(mu));
        }
    }
    std::sort(ctx.I1.begin(), ctx.I1.end());
    std::sort(ctx.I1bar.begin(), ctx.I1bar.end());
    ctx.I = ctx.I0;
    ctx.I.insert(ctx.I.end(), ctx.I1.begin(), ctx.I1.end());
    std::sort(ctx.I.begin(), ctx.I.end());
    ctx.Itilde.push_back(CIdx::zero());
    for (const Gi& g : ctx.I) ctx.Itilde.push_back(CIdx::of(g));
    return ctx;
}

} // namespace ospchar
