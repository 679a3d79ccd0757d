#pragma once

// Exact scalar arithmetic: arbitrary-precision integers, canonical rationals,
// and Gaussian rationals (Q(i) as a pair of rationals).
//
// Rationals are boost::multiprecision::cpp_rational, which maintains the
// canonical form this library relies on everywhere: gcd(|num|, den) = 1,
// den >= 1, zero represented as 0/1.  Equality of values is equality of
// components.  Division by zero throws.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "hypercongr/errors.hpp"

namespace hypercongr {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

Rational rational_from_string(const std::string& text);

// Always prints an explicit denominator, e.g. "914095/1048576", "-5/1".
std::string format_rational(const Rational& q);

double rational_to_double(const Rational& q);

// p-adic valuation of a rational; v_p(0) is a distinguished +infinity,
// never a sentinel integer.
struct Valuation {
    long long value = 0;
    bool infinite = false;

    static Valuation at(long long v) { return Valuation{v, false}; }
    static Valuation plus_infinity() { return Valuation{0, true}; }

    bool at_least(long long threshold) const { return infinite || value >= threshold; }
    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

// Exponent of p in n; n must be nonzero.
long long valuation_integer(Integer n, std::int64_t p);

Valuation valuation_rational(const Rational& q, std::int64_t p);

// An element of Q(i).  Field operations are exact; conj(z)*z is real and
// nonnegative.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return GaussianRational(re, -im); }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator-(const GaussianRational& z) {
        return GaussianRational(-z.re, -z.im);
    }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re + b.re, a.im + b.im);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re - b.re, a.im - b.im);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = b.norm();
        return GaussianRational((a.re * b.re + a.im * b.im) / n,
                                (a.im * b.re - a.re * b.im) / n);
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

std::string format_gaussian(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// min of the component valuations; exact and compatible with v_p on Q(i)
// for inert primes (p = 3 mod 4), which is the only case the library uses.
Valuation valuation_gaussian(const GaussianRational& z, std::int64_t p);

// --- uniform scalar interface used by the generic hypergeometric machinery ---

inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_exact_zero(const Rational& q) { return q == 0; }
inline bool is_invertible(const Rational& q) { return q != 0; }
inline Rational reciprocal(const Rational& q) {
    if (q == 0) throw std::domain_error("Rational: division by zero");
    return 1 / q;
}
inline Rational plus_integer(const Rational& q, long n) { return q + n; }
inline Rational times_integer(const Rational& q, long n) { return q * n; }

inline GaussianRational one_like(const GaussianRational&) { return GaussianRational(Rational(1)); }
inline bool is_exact_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool is_invertible(const GaussianRational& z) { return !z.is_zero(); }
inline GaussianRational reciprocal(const GaussianRational& z) {
    return GaussianRational(Rational(1)) / z;
}
inline GaussianRational plus_integer(const GaussianRational& z, long n) {
    return GaussianRational(z.re + n, z.im);
}
inline GaussianRational times_integer(const GaussianRational& z, long n) {
    return GaussianRational(z.re * n, z.im * n);
}

}  // namespace hypercongr
