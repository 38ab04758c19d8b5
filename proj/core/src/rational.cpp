#include "latpack/rational.hpp"

#include <cctype>

namespace latpack {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    Int n = num(r), d = den(r);
    Int sn = boost::multiprecision::sqrt(n);
    if (sn * sn != n) return std::nullopt;
    Int sd = boost::multiprecision::sqrt(d);
    if (sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = (s[0] == '-');
        s.erase(0, 1);
    }
    std::string ns = s, ds = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        ns = s.substr(0, slash);
        ds = s.substr(slash + 1);
    }
    if (!all_digits(ns) || !all_digits(ds))
        throw IoError("malformed rational: '" + text + "'");
    Int n(ns), d(ds);
    if (d == 0) throw IoError("zero denominator: '" + text + "'");
    Rational r(n, d);
    return neg ? -r : r;
}

std::string format_rational(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

} // namespace latpack
