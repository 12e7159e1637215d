#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "ospchar/errors.hpp"

namespace ospchar {

// Arbitrary-precision rational. Thin value wrapper over mpq_class so that
// Eigen and the rest of the code see a plain scalar type without gmpxx
// expression templates. Always stored canonicalized (reduced, denominator > 0).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<long int>(n)) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with optional sign, arbitrary precision.
    static Rat from_string(const std::string& s) {
        if (s.empty()) throw DomainError("empty rational literal");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
        if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
        q.canonicalize();
        return Rat(std::move(q), tag{});
    }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_), tag{}); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_), tag{}); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_), tag{}); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw DomainError("rational division by zero");
        return Rat(mpq_class(a.v_ / b.v_), tag{});
    }
    Rat operator-() const { return Rat(mpq_class(-v_), tag{}); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    int sgn() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_integer() const { return v_.get_den() == 1; }
    // True exactly for odd/2 values (1/2, -3/2, ...), not for integers.
    bool is_half_odd() const { return v_.get_den() == 2; }
    Rat abs() const { return sgn() < 0 ? -*this : *this; }
    Rat inv() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rat(mpq_class(1 / v_), tag{});
    }

    const mpq_class& raw() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
    struct tag {};
    Rat(mpq_class q, tag) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rat half(long num) { return Rat(num, 2); }

} // namespace ospchar
