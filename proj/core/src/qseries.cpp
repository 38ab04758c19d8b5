#include "latpack/qseries.hpp"

#include <sstream>

namespace latpack {

QSeries QSeries::constant(const Rational& c) {
    QSeries s;
    s.add_term(0, c);
    return s;
}

QSeries QSeries::monomial(const Rational& coeff, const Rational& exp) {
    QSeries s;
    s.add_term(exp, coeff);
    return s;
}

void QSeries::add_term(const Rational& exp, const Rational& c) {
    if (exp < 0) throw PreconditionError("q-series exponent must be nonnegative");
    if (4 % den(exp) != 0)
        throw PreconditionError("q-series exponent denominator must divide 4");
    if (cutoff_ && exp >= *cutoff_) return;
    Rational& slot = terms_[exp];
    slot += c;
    if (slot == 0) terms_.erase(exp);
}

Rational QSeries::coefficient(const Rational& exp) const {
    if (cutoff_ && exp >= *cutoff_)
        throw PreconditionError("coefficient requested beyond series cutoff");
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> QSeries::min_cutoff(const std::optional<Rational>& a,
                                            const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

void QSeries::trim() {
    if (!cutoff_) return;
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->first >= *cutoff_) ? terms_.erase(it) : std::next(it);
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r;
    r.cutoff_ = min_cutoff(cutoff_, o.cutoff_);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    return *this + o.scaled(-1);
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r;
    r.cutoff_ = min_cutoff(cutoff_, o.cutoff_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Rational e = e1 + e2;
            if (r.cutoff_ && e >= *r.cutoff_) break;
            r.add_term(e, c1 * c2);
        }
    return r;
}

QSeries QSeries::scaled(const Rational& f) const {
    QSeries r;
    r.cutoff_ = cutoff_;
    if (f == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * f;
    return r;
}

QSeries QSeries::pow(unsigned k) const {
    QSeries acc = constant(1);
    acc.cutoff_ = cutoff_;
    QSeries base = *this;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return acc;
}

QSeries QSeries::truncated(const Rational& cutoff) const {
    QSeries r = *this;
    r.set_cutoff(min_cutoff(cutoff_, cutoff));
    return r;
}

bool QSeries::agrees_with(const QSeries& o) const {
    auto limit = min_cutoff(cutoff_, o.cutoff_);
    for (const auto& [e, c] : terms_) {
        if (limit && e >= *limit) continue;
        if (o.coefficient(e) != c) return false;
    }
    for (const auto& [e, c] : o.terms_) {
        if (limit && e >= *limit) continue;
        if (coefficient(e) != c) return false;
    }
    return true;
}

std::string QSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << format_rational(ac);
        } else {
            if (ac != 1) out << format_rational(ac) << "*";
            out << "q";
            if (e != 1) {
                if (is_integer(e))
                    out << "^" << format_rational(e);
                else
                    out << "^(" << format_rational(e) << ")";
            }
        }
    }
    if (first) out << "0";
    if (cutoff_) out << " + O(q^" << format_rational(*cutoff_) << ")";
    return out.str();
}

} // namespace latpack
