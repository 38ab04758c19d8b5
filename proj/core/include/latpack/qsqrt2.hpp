#pragma once

#include <compare>
#include <optional>
#include <string>

#include "latpack/rational.hpp"

namespace latpack {

// Element rat + rad*sqrt(2) of the field Q(sqrt2).  All arithmetic and
// comparisons are exact.
struct QSqrt2 {
    Rational rat;
    Rational rad;

    QSqrt2() = default;
    QSqrt2(Rational r) : rat(std::move(r)) {}
    QSqrt2(long long r) : rat(r) {}
    QSqrt2(Rational r, Rational s) : rat(std::move(r)), rad(std::move(s)) {}

    bool is_rational() const { return rad == 0; }
    bool is_integer() const { return rad == 0 && latpack::is_integer(rat); }
    bool is_zero() const { return rat == 0 && rad == 0; }

    // Sign of the real value rat + rad*sqrt(2), as -1, 0 or +1.
    int sign() const;

    // Galois conjugate rat - rad*sqrt(2).
    QSqrt2 conj() const { return {rat, -rad}; }

    // Field norm rat^2 - 2*rad^2 (product with the conjugate).
    Rational field_norm() const { return rat * rat - 2 * rad * rad; }

    double to_double() const;

    QSqrt2 operator-() const { return {-rat, -rad}; }
    QSqrt2& operator+=(const QSqrt2& o) { rat += o.rat; rad += o.rad; return *this; }
    QSqrt2& operator-=(const QSqrt2& o) { rat -= o.rat; rad -= o.rad; return *this; }
    QSqrt2& operator*=(const QSqrt2& o);

    friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { a += b; return a; }
    friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { a -= b; return a; }
    friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { a *= b; return a; }
    friend QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b) { return a * b.inverse(); }

    // Multiplicative inverse; throws PreconditionError on zero.
    QSqrt2 inverse() const;

    friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
        return a.rat == b.rat && a.rad == b.rad;
    }
    friend bool operator!=(const QSqrt2& a, const QSqrt2& b) { return !(a == b); }
    friend bool operator<(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QSqrt2& b, const QSqrt2& a) { return a < b; }
    friend bool operator<=(const QSqrt2& a, const QSqrt2& b) { return !(b < a); }
    friend bool operator>=(const QSqrt2& a, const QSqrt2& b) { return !(a < b); }
};

// Exact square root within Q(sqrt2) if one exists.
std::optional<QSqrt2> qsqrt2_sqrt(const QSqrt2& x);

// Accepts "p/q", "p/q+r/s*sqrt2", "p/q-r/s*sqrt2" and "r/s*sqrt2"
// (integers allowed wherever a fraction may appear).
QSqrt2 parse_scalar(const std::string& text);

// Canonical inverse of parse_scalar.
std::string format_scalar(const QSqrt2& x);

} // namespace latpack
