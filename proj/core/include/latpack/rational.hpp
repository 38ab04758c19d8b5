#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "latpack/errors.hpp"

namespace latpack {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// Largest integer <= r.
inline Int floor_int(const Rational& r) {
    Int q = num(r) / den(r);
    if (num(r) < 0 && q * den(r) != num(r)) --q;
    return q;
}

inline Int ceil_int(const Rational& r) { return -floor_int(-r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact square root if r is a perfect square of a rational, else nullopt.
std::optional<Rational> rational_sqrt(const Rational& r);

// Accepts "p" and "p/q" with optional leading sign; q must be positive
// after normalization.
Rational parse_rational(const std::string& text);

// Canonical form "p" or "p/q" with q > 1.
std::string format_rational(const Rational& r);

} // namespace latpack
