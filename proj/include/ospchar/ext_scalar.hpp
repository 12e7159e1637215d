#pragma once

#include <ostream>
#include <string>

#include "ospchar/rational.hpp"

namespace ospchar {

// Element of the number field Q(i, sqrt2): a + b*i + c*sqrt2 + d*i*sqrt2.
// Closed under the field operations; conj() negates the i-components.
struct Ext {
    Rat a, b, c, d;

    Ext() = default;
    Ext(int n) : a(n) {}
    explicit Ext(Rat ra) : a(std::move(ra)) {}
    Ext(Rat ra, Rat rb, Rat rc, Rat rd)
        : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}

    static Ext i() { return Ext(Rat(0), Rat(1), Rat(0), Rat(0)); }
    static Ext sqrt2() { return Ext(Rat(0), Rat(0), Rat(1), Rat(0)); }
    static Ext inv_sqrt2() { return Ext(Rat(0), Rat(0), Rat(1, 2), Rat(0)); } // sqrt2/2

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_rational() const { return b.is_zero() && c.is_zero() && d.is_zero(); }

    friend Ext operator+(const Ext& x, const Ext& y) {
        return Ext(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
    }
    friend Ext operator-(const Ext& x, const Ext& y) {
        return Ext(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
    }
    Ext operator-() const { return Ext(-a, -b, -c, -d); }

    // (a1 + b1 i + c1 r + d1 ir)(a2 + b2 i + c2 r + d2 ir), r^2 = 2, i^2 = -1.
    friend Ext operator*(const Ext& x, const Ext& y) {
        return Ext(x.a * y.a - x.b * y.b + Rat(2) * (x.c * y.c - x.d * y.d),
                   x.a * y.b + x.b * y.a + Rat(2) * (x.c * y.d + x.d * y.c),
                   x.a * y.c + x.c * y.a - x.b * y.d - x.d * y.b,
                   x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b);
    }

    Ext& operator+=(const Ext& o) { *this = *this + o; return *this; }
    Ext& operator-=(const Ext& o) { *this = *this - o; return *this; }
    Ext& operator*=(const Ext& o) { *this = *this * o; return *this; }

    friend bool operator==(const Ext& x, const Ext& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    Ext conj() const { return Ext(a, -b, c, -d); }      // i -> -i
    Ext conj_sqrt2() const { return Ext(a, b, -c, -d); } // sqrt2 -> -sqrt2

    // Field inverse via the two conjugations: x * conj(x) lands in Q(sqrt2),
    // then times its sqrt2-conjugate lands in Q.
    Ext inv() const {
        if (is_zero()) throw DomainError("inverse of zero field element");
        const Ext y = conj();
        const Ext p = *this * y;          // b, d components vanish
        const Ext z = p.conj_sqrt2();
        const Ext n = p * z;              // rational: n.a (others vanish)
        const Rat ninv = n.a.inv();
        const Ext w = y * z;
        return Ext(w.a * ninv, w.b * ninv, w.c * ninv, w.d * ninv);
    }

    friend Ext operator/(const Ext& x, const Ext& y) { return x * y.inv(); }

    // Canonical text form: nonzero terms joined by signs, coefficients always
    // explicit, symbols "i", "√2", "i√2"; "0" when zero.
    std::string to_string() const {
        std::string out;
        auto emit = [&out](const Rat& r, const char* sym) {
            if (r.is_zero()) return;
            if (out.empty()) {
                out += r.to_string();
            } else if (r.sgn() < 0) {
                out += "-" + (-r).to_string();
            } else {
                out += "+" + r.to_string();
            }
            out += sym;
        };
        emit(a, "");
        emit(b, "i");
        emit(c, "√2");
        emit(d, "i√2");
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Ext& x) { return os << x.to_string(); }
};

} // namespace ospchar
