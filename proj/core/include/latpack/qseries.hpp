#pragma once

#include <map>
#include <optional>
#include <string>

#include "latpack/rational.hpp"

namespace latpack {

// Finite q-expansion with exact rational coefficients and rational exponents
// (denominators dividing 4).  A series may carry a cutoff: coefficients are
// only meaningful for exponents strictly below it.  Series without a cutoff
// are exact polynomials.
class QSeries {
public:
    QSeries() = default;

    static QSeries zero() { return {}; }
    static QSeries constant(const Rational& c);
    static QSeries monomial(const Rational& coeff, const Rational& exp);

    const std::map<Rational, Rational>& terms() const { return terms_; }
    const std::optional<Rational>& cutoff() const { return cutoff_; }

    void set_cutoff(std::optional<Rational> c) { cutoff_ = std::move(c); trim(); }

    // Adds c * q^exp.  Exponents must be >= 0 with denominator dividing 4.
    void add_term(const Rational& exp, const Rational& c);

    // Coefficient of q^exp; exp must lie below the cutoff.
    Rational coefficient(const Rational& exp) const;

    bool is_zero() const { return terms_.empty(); }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries scaled(const Rational& f) const;
    QSeries pow(unsigned k) const;
    QSeries truncated(const Rational& cutoff) const;

    // True if the two series agree on every exponent below both cutoffs.
    bool agrees_with(const QSeries& o) const;

    std::string to_string() const;

private:
    void trim();
    static std::optional<Rational> min_cutoff(const std::optional<Rational>& a,
                                              const std::optional<Rational>& b);

    std::map<Rational, Rational> terms_;
    std::optional<Rational> cutoff_;
};

} // namespace latpack
