#pragma once

#include <vector>

#include "ospchar/rational.hpp"

namespace ospchar {

// Dense univariate polynomial over Rat. Coefficient i multiplies t^i; the
// vector carries no trailing zeros, the zero polynomial is the empty vector.
struct Poly {
    std::vector<Rat> c;

    static Poly zero() { return Poly{}; }
    static Poly constant(const Rat& r) {
        Poly p;
        if (!r.is_zero()) p.c = {r};
        return p;
    }
    static Poly linear(const Rat& c0, const Rat& c1) {
        if (c1.is_zero()) return constant(c0);
        Poly p;
        p.c = {c0, c1};
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    Rat eval(const Rat& t) const {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        Poly r;
        r.c.resize(std::max(p.c.size(), q.c.size()), Rat(0));
        for (size_t i = 0; i < p.c.size(); ++i) r.c[i] += p.c[i];
        for (size_t i = 0; i < q.c.size(); ++i) r.c[i] += q.c[i];
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& p, const Poly& q) {
        Poly r;
        r.c.resize(std::max(p.c.size(), q.c.size()), Rat(0));
        for (size_t i = 0; i < p.c.size(); ++i) r.c[i] += p.c[i];
        for (size_t i = 0; i < q.c.size(); ++i) r.c[i] -= q.c[i];
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return zero();
        Poly r;
        r.c.assign(p.c.size() + q.c.size() - 1, Rat(0));
        for (size_t i = 0; i < p.c.size(); ++i)
            for (size_t j = 0; j < q.c.size(); ++j) r.c[i + j] += p.c[i] * q.c[j];
        r.trim();
        return r;
    }

    Poly scaled(const Rat& s) const {
        if (s.is_zero()) return zero();
        Poly r = *this;
        for (auto& x : r.c) x *= s;
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(c.back().inv());
    }
};

// Euclidean division; divisor must be nonzero.
inline void poly_divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    rem = a;
    quo = Poly::zero();
    const int db = b.degree();
    const Rat lead_inv = b.c.back().inv();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        const Rat f = rem.c.back() * lead_inv;
        Poly term;
        term.c.assign(static_cast<size_t>(shift) + 1, Rat(0));
        term.c[static_cast<size_t>(shift)] = f;
        quo = quo + term;
        rem = rem - term * b;
    }
}

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        poly_divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace ospchar
