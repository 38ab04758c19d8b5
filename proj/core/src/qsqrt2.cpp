#include "latpack/qsqrt2.hpp"

#include <cmath>

namespace latpack {

int QSqrt2::sign() const {
    if (rad == 0) return latpack::sign(rat);
    if (rat == 0) return latpack::sign(rad);
    int sa = latpack::sign(rat), sb = latpack::sign(rad);
    if (sa == sb) return sa;
    // Mixed signs: compare |rat| against |rad|*sqrt2 via squares.
    return sa * latpack::sign(field_norm());
}

double QSqrt2::to_double() const {
    return latpack::to_double(rat) + latpack::to_double(rad) * std::sqrt(2.0);
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    Rational r = rat * o.rat + 2 * rad * o.rad;
    Rational s = rat * o.rad + rad * o.rat;
    rat = std::move(r);
    rad = std::move(s);
    return *this;
}

QSqrt2 QSqrt2::inverse() const {
    if (is_zero()) throw PreconditionError("division by zero in Q(sqrt2)");
    Rational nrm = field_norm();
    return {rat / nrm, -rad / nrm};
}

std::optional<QSqrt2> qsqrt2_sqrt(const QSqrt2& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return QSqrt2(0);
    if (x.rad == 0) {
        if (auto c = rational_sqrt(x.rat)) return QSqrt2(*c);
        if (auto d = rational_sqrt(x.rat / 2)) return QSqrt2(Rational(0), *d);
        return std::nullopt;
    }
    // (c + d*sqrt2)^2 = c^2 + 2d^2 + 2cd*sqrt2, so c^2 solves
    // t^2 - rat*t + rad^2/2 = 0.
    auto disc = rational_sqrt(x.field_norm());
    if (!disc) return std::nullopt;
    const Rational roots[2] = {Rational((x.rat + *disc) / 2), Rational((x.rat - *disc) / 2)};
    for (const Rational& csq : roots) {
        auto c = rational_sqrt(csq);
        if (!c || *c == 0) continue;
        QSqrt2 y(*c, x.rad / (2 * *c));
        if (y.sign() < 0) y = -y;
        if (y * y == x) return y;
    }
    return std::nullopt;
}

QSqrt2 parse_scalar(const std::string& text) {
    static const std::string suffix = "*sqrt2";
    if (text.size() >= suffix.size() &&
        text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0) {
        std::string body = text.substr(0, text.size() - suffix.size());
        // Split off a trailing +r/s or -r/s radical coefficient if the body
        // also has a rational part.
        std::size_t split = std::string::npos;
        for (std::size_t i = 1; i < body.size(); ++i) {
            if ((body[i] == '+' || body[i] == '-') &&
                std::isdigit(static_cast<unsigned char>(body[i - 1])))
                split = i;
        }
        if (split == std::string::npos)
            return {Rational(0), parse_rational(body)};
        return {parse_rational(body.substr(0, split)),
                parse_rational(body.substr(split))};
    }
    return {parse_rational(text), Rational(0)};
}

std::string format_scalar(const QSqrt2& x) {
    if (x.rad == 0) return format_rational(x.rat);
    std::string radpart = format_rational(abs(x.rad)) + "*sqrt2";
    if (x.rat == 0) return (x.rad < 0 ? "-" : "") + radpart;
    return format_rational(x.rat) + (x.rad < 0 ? "-" : "+") + radpart;
}

} // namespace latpack
