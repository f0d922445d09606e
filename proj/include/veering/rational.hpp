#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "veering/errors.hpp"

namespace veering {

/// Exact rational on int64. Angles are stored as rationals meaning
/// coefficient-of-pi, so every quantity in the library is exact; pi itself is
/// never evaluated numerically. Intermediates run through __int128 and
/// overflow is a hard error rather than silent wraparound. Desk-scale inputs
/// (a few dozen tetrahedra) stay far below the guard.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        check_internal(d != 0, "rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        __int128 n = i128(x.num_) * y.den_ + i128(y.num_) * x.den_;
        __int128 d = i128(x.den_) * y.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        __int128 n = i128(x.num_) * y.den_ - i128(y.num_) * x.den_;
        __int128 d = i128(x.den_) * y.den_;
        return from128(n, d);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return from128(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        check_internal(y.num_ != 0, "rational division by zero");
        return from128(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    /// Reduced "p/q" form, used verbatim in JSON reports.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using I = __int128;
    static I i128(std::int64_t v) { return static_cast<I>(v); }

    static Rational from128(I n, I d) {
        if (d < 0) { n = -n; d = -d; }
        I g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr I lo = INT64_MIN, hi = INT64_MAX;
        check_internal(n >= lo && n <= hi && d >= 1 && d <= hi, "rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static I gcd128(I a, I b) {
        while (b != 0) { I t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational min(const Rational& x, const Rational& y) { return x < y ? x : y; }
inline Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

}  // namespace veering
