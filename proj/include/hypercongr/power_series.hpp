#pragma once

// Truncated formal power series over Q(i) with a fixed, explicit order.
// Binary operations require equal orders and fail loudly otherwise; there is
// no lazy or infinite representation.

#include <cstddef>
#include <ostream>
#include <vector>

#include "hypercongr/exact.hpp"

namespace hypercongr {

class PowerSeries {
public:
    // The zero series of the given order (order + 1 stored coefficients).
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}

    static PowerSeries constant(const GaussianRational& c, std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    // The series "x".
    static PowerSeries variable(std::size_t order) {
        PowerSeries s(order);
        if (order >= 1) s.coeffs_[1] = GaussianRational(Rational(1));
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const GaussianRational& coeff(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, GaussianRational c) { coeffs_.at(i) = std::move(c); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend PowerSeries operator-(const PowerSeries& a) {
        PowerSeries r(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = -a.coeffs_[i];
        return r;
    }
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b);
        PowerSeries r(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b);
        PowerSeries r(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }
    // Cauchy product truncated at the shared order.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b);
        PowerSeries r(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Multiplicative inverse up to the truncation order; requires a nonzero
    // constant coefficient.
    PowerSeries reciprocal() const;

private:
    static void require_same_order(const PowerSeries& a, const PowerSeries& b);

    std::vector<GaussianRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

inline PowerSeries one_like(const PowerSeries& s) {
    return PowerSeries::constant(GaussianRational(Rational(1)), s.order());
}
inline bool is_exact_zero(const PowerSeries& s) { return s.is_zero(); }
inline bool is_invertible(const PowerSeries& s) { return !s.coeff(0).is_zero(); }
inline PowerSeries reciprocal(const PowerSeries& s) { return s.reciprocal(); }
inline PowerSeries plus_integer(const PowerSeries& s, long n) {
    PowerSeries r = s;
    r.set_coeff(0, r.coeff(0) + GaussianRational(Rational(n)));
    return r;
}
inline PowerSeries times_integer(const PowerSeries& s, long n) {
    return s * PowerSeries::constant(GaussianRational(Rational(n)), s.order());
}

}  // namespace hypercongr
