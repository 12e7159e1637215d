#include "ospchar/char_roots.hpp"

#include <algorithm>

namespace ospchar {

ExtendedLabels extended_labels(const Weight& w) {
    w.validate_shape();
    const Signature sig = w.sig;
    const int m = sig.m, n = sig.n, h = sig.h(), k = sig.k();
    ExtendedLabels ext;
    ext.sig = sig;
    ext.even.assign(static_cast<size_t>(m), Rat(0));
    ext.odd.assign(static_cast<size_t>(n), Rat(0));
    for (int i = 1; i <= m; ++i) {
        Rat v;
        if (i <= h) v = w.even[static_cast<size_t>(i - 1)];
        else if (sig.odd_m() && i == h + 1) v = Rat(1, 2);
        else v = Rat(1) - w.even[static_cast<size_t>(m - i)];
        ext.even[static_cast<size_t>(i - 1)] = v;
    }
    for (int mu = 1; mu <= n; ++mu) {
        Rat v;
        if (mu <= k) v = w.odd[static_cast<size_t>(mu - 1)];
        else v = Rat(m) - w.odd[static_cast<size_t>(n - mu)] - Rat(1);
        ext.odd[static_cast<size_t>(mu - 1)] = v;
    }
    return ext;
}

const Rat& CharRoots::at(const Gi& g) const {
    validate_index(g, sig);
    return g.is_even() ? even[static_cast<size_t>(g.pos - 1)] : odd[static_cast<size_t>(g.pos - 1)];
}

CharRoots characteristic_roots(const Weight& w) {
    const ExtendedLabels ext = extended_labels(w);
    const Signature sig = w.sig;
    const int m = sig.m, n = sig.n;
    CharRoots roots;
    roots.sig = sig;
    roots.even.assign(static_cast<size_t>(m), Rat(0));
    roots.odd.assign(static_cast<size_t>(n), Rat(0));
    for (int i = 1; i <= m; ++i)
        roots.even[static_cast<size_t>(i - 1)] =
            ext.even[static_cast<size_t>(i - 1)] + Rat(2 * (m - i) - n - 2, 2);
    for (int mu = 1; mu <= n; ++mu)
        roots.odd[static_cast<size_t>(mu - 1)] =
            -ext.odd[static_cast<size_t>(mu - 1)] + Rat(m - n + mu - 1);
    return roots;
}

CharRoots casimir_difference_roots(const Weight& w) {
    CharRoots roots = characteristic_roots(w);
    const Signature sig = w.sig;
    if (sig.odd_m()) roots.even[static_cast<size_t>(sig.h())] = Rat(sig.m - sig.n - 1, 2);
    return roots;
}

CharRoots parent_roots(const Weight& parent_weight) { return characteristic_roots(parent_weight); }

std::vector<std::pair<Gi, Gi>> degeneracy_report(const CharRoots& roots) {
    const std::vector<Gi> idx = all_indices(roots.sig);
    std::vector<std::pair<Gi, Gi>> out;
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (roots.at(idx[a]) == roots.at(idx[b])) out.emplace_back(idx[a], idx[b]);
    return out;
}

} // namespace ospchar
