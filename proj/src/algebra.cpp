#include "ospchar/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace ospchar {

void validate_index(const Gi& g, const Signature& sig) {
    sig.validate();
    const int limit = g.is_even() ? sig.m : sig.n;
    if (g.pos < 1 || g.pos > limit)
        throw DomainError("graded index " + g.to_string() + " out of range for osp(" +
                          std::to_string(sig.m) + "|" + std::to_string(sig.n) + ")");
}

int theta(const Gi& g, const Signature& sig) {
    validate_index(g, sig);
    if (g.is_even()) return 1;
    return g.pos <= sig.k() ? 1 : -1;
}

Gi bar(const Gi& g, const Signature& sig) {
    validate_index(g, sig);
    return Gi{g.par, (g.is_even() ? sig.m : sig.n) + 1 - g.pos};
}

Gi tilde(const Gi& g, const Signature& sig) {
    validate_index(g, sig);
    return g.is_even() ? g : bar(g, sig);
}

int flat(const Gi& g, const Signature& sig) {
    validate_index(g, sig);
    return g.is_even() ? g.pos - 1 : sig.m + g.pos - 1;
}

Gi from_flat(int idx, const Signature& sig) {
    sig.validate();
    if (idx < 0 || idx >= sig.dim()) throw DomainError("flat index out of range");
    return idx < sig.m ? Gi::even(idx + 1) : Gi::odd(idx - sig.m + 1);
}

std::vector<Gi> all_indices(const Signature& sig) {
    sig.validate();
    std::vector<Gi> out;
    out.reserve(static_cast<size_t>(sig.dim()));
    for (int i = 1; i <= sig.m; ++i) out.push_back(Gi::even(i));
    for (int mu = 1; mu <= sig.n; ++mu) out.push_back(Gi::odd(mu));
    return out;
}

void Weight::validate_shape() const {
    sig.validate();
    if (static_cast<int>(even.size()) != sig.h() || static_cast<int>(odd.size()) != sig.k())
        throw DomainError("weight has wrong label counts for osp(" + std::to_string(sig.m) +
                          "|" + std::to_string(sig.n) + ")");
}

namespace {

// Strict rational literal: optional '-', digits, optional '/digits'.
void check_rational_literal(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0) throw DomainError("bad rational literal: '" + s + "'");
    if (i == s.size()) return;
    if (s[i] != '/') throw DomainError("bad rational literal: '" + s + "'");
    ++i;
    digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0 || i != s.size()) throw DomainError("bad rational literal: '" + s + "'");
}

std::vector<Rat> parse_label_list(const std::string& body, const std::string& where) {
    std::vector<Rat> out;
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        check_rational_literal(item);
        out.push_back(Rat::from_string(item));
    }
    if (!body.empty() && body.back() == ',')
        throw DomainError("trailing comma in " + where + " labels");
    return out;
}

} // namespace

Weight parse_weight(const std::string& text, const Signature& sig) {
    sig.validate();
    const std::string even_tag = "even:";
    const std::string odd_tag = ";odd:";
    if (text.rfind(even_tag, 0) != 0)
        throw DomainError("weight text must start with 'even:': '" + text + "'");
    const size_t sep = text.find(odd_tag);
    if (sep == std::string::npos)
        throw DomainError("weight text must contain ';odd:': '" + text + "'");
    Weight w;
    w.sig = sig;
    w.even = parse_label_list(text.substr(even_tag.size(), sep - even_tag.size()), "even");
    w.odd = parse_label_list(text.substr(sep + odd_tag.size()), "odd");
    w.validate_shape();
    return w;
}

std::string format_weight(const Weight& w) {
    w.validate_shape();
    std::string out = "even:";
    for (size_t i = 0; i < w.even.size(); ++i) {
        if (i) out += ",";
        out += w.even[i].to_string();
    }
    out += ";odd:";
    for (size_t i = 0; i < w.odd.size(); ++i) {
        if (i) out += ",";
        out += w.odd[i].to_string();
    }
    return out;
}

bool weight_less(const Weight& a, const Weight& b) {
    if (a.even != b.even)
        return std::lexicographical_compare(a.even.begin(), a.even.end(), b.even.begin(), b.even.end());
    return std::lexicographical_compare(a.odd.begin(), a.odd.end(), b.odd.begin(), b.odd.end());
}

Rat bilinear_form(const Weight& u, const Weight& v) {
    u.validate_shape();
    v.validate_shape();
    if (!(u.sig == v.sig)) throw DomainError("bilinear form needs matching signatures");
    Rat acc(0);
    for (size_t i = 0; i < u.even.size(); ++i) acc += u.even[i] * v.even[i];
    for (size_t i = 0; i < u.odd.size(); ++i) acc -= u.odd[i] * v.odd[i];
    return acc;
}

Weight rho(const Signature& sig, Convention conv) {
    sig.validate();
    Weight r = Weight::zero(sig);
    if (conv == Convention::Distinguished) {
        if (sig.m != 2) throw DomainError("distinguished convention applies to m = 2 only");
        r.even[0] = Rat(-sig.n, 2);
        for (int mu = 1; mu <= sig.k(); ++mu) r.odd[static_cast<size_t>(mu - 1)] = Rat(sig.n - 2 * mu + 2, 2);
        return r;
    }
    for (int i = 1; i <= sig.h(); ++i) r.even[static_cast<size_t>(i - 1)] = Rat(sig.m - 2 * i, 2);
    for (int mu = 1; mu <= sig.k(); ++mu)
        r.odd[static_cast<size_t>(mu - 1)] = Rat(sig.n - sig.m - 2 * mu + 2, 2);
    return r;
}

Rat casimir_eigenvalue(const Weight& w, Convention conv) {
    w.validate_shape();
    const Weight r = rho(w.sig, conv);
    return bilinear_form(w, weight_sum(w, weight_scale(r, Rat(2))));
}

WeightClass validate_dominant(const Weight& w) {
    w.validate_shape();
    const auto& odd = w.odd;
    for (const auto& x : odd)
        if (!x.is_integer() || x.sgn() < 0)
            throw DomainError("odd labels must be non-negative integers");
    for (size_t mu = 1; mu < odd.size(); ++mu)
        if (odd[mu] > odd[mu - 1])
            throw DomainError("odd labels must be non-increasing");

    const int m = w.sig.m;
    const auto& ev = w.even;
    if (m <= 1) return WeightClass::Tensor;
    if (m == 2) return ev[0].is_half_odd() ? WeightClass::Spinor : WeightClass::Tensor;

    bool all_int = true, all_half = true;
    for (const auto& x : ev) {
        all_int = all_int && x.is_integer();
        all_half = all_half && x.is_half_odd();
    }
    if (!all_int && !all_half)
        throw DomainError("even labels must be all integers or all half-odd integers");
    for (size_t i = 1; i < ev.size(); ++i)
        if (ev[i] > ev[i - 1]) throw DomainError("even labels must be non-increasing");
    if (w.sig.odd_m()) {
        if (ev.back().sgn() < 0) throw DomainError("even labels must end >= 0 for odd m");
    } else {
        if (ev.size() >= 2 && ev[ev.size() - 2] < ev.back().abs())
            throw DomainError("even labels must satisfy Lambda_{h-1} >= |Lambda_h|");
    }
    return all_half ? WeightClass::Spinor : WeightClass::Tensor;
}

Weight basis_vector_weight(const Gi& g, const Signature& sig) {
    validate_index(g, sig);
    Weight w = Weight::zero(sig);
    if (g.is_even()) {
        const int h = sig.h();
        if (g.pos <= h) {
            w.even[static_cast<size_t>(g.pos - 1)] = Rat(1);
        } else if (g.pos > sig.m - h) {
            w.even[static_cast<size_t>(sig.m - g.pos)] = Rat(-1);
        }
        // middle index of odd m carries weight zero
    } else {
        const int k = sig.k();
        if (g.pos <= k) {
            w.odd[static_cast<size_t>(g.pos - 1)] = Rat(1);
        } else {
            w.odd[static_cast<size_t>(sig.n - g.pos)] = Rat(-1);
        }
    }
    return w;
}

Weight weight_sum(const Weight& a, const Weight& b) {
    a.validate_shape();
    b.validate_shape();
    if (!(a.sig == b.sig)) throw DomainError("weight sum needs matching signatures");
    Weight out = a;
    for (size_t i = 0; i < out.even.size(); ++i) out.even[i] += b.even[i];
    for (size_t i = 0; i < out.odd.size(); ++i) out.odd[i] += b.odd[i];
    return out;
}

Weight weight_scale(const Weight& a, const Rat& s) {
    a.validate_shape();
    Weight out = a;
    for (auto& x : out.even) x *= s;
    for (auto& x : out.odd) x *= s;
    return out;
}

} // namespace ospchar
