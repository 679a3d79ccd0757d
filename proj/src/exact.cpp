#include "hypercongr/exact.hpp"

#include <algorithm>
#include <cctype>

namespace hypercongr {

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(t));
        Integer num(strip(t.substr(0, slash)));
        Integer den(strip(t.substr(slash + 1)));
        if (den == 0) throw std::domain_error("rational literal with zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + text + "': " + e.what());
    }
}

std::string format_rational(const Rational& q) {
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    if (v.infinite) return os << "+inf";
    return os << v.value;
}

long long valuation_integer(Integer n, std::int64_t p) {
    if (n == 0) throw std::invalid_argument("valuation_integer: n must be nonzero");
    if (n < 0) n = -n;
    long long v = 0;
    Integer q, r;
    while (true) {
        boost::multiprecision::divide_qr(n, Integer(p), q, r);
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

Valuation valuation_rational(const Rational& q, std::int64_t p) {
    if (q == 0) return Valuation::plus_infinity();
    return Valuation::at(valuation_integer(numerator_of(q), p) -
                         valuation_integer(denominator_of(q), p));
}

std::string format_gaussian(const GaussianRational& z) {
    if (z.im == 0) return format_rational(z.re);
    std::string s = format_rational(z.re);
    s += (z.im < 0) ? " - " : " + ";
    Rational a = z.im < 0 ? Rational(-z.im) : z.im;
    s += format_rational(a) + "*i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << format_gaussian(z);
}

Valuation valuation_gaussian(const GaussianRational& z, std::int64_t p) {
    Valuation vr = valuation_rational(z.re, p);
    Valuation vi = valuation_rational(z.im, p);
    if (vr.infinite) return vi;
    if (vi.infinite) return vr;
    return Valuation::at(std::min(vr.value, vi.value));
}

}  // namespace hypercongr
