#pragma once

#include "harmap/spectral.hpp"

#include <vector>

namespace harmap {

// Truncated Taylor series c_0 + c_1 z + ... + c_K z^K.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<cplx> c) : c_(std::move(c)) {
        if (c_.empty()) c_.push_back(0.0);
    }

    static PowerSeries zero(std::size_t order) { return PowerSeries(std::vector<cplx>(order + 1)); }
    static PowerSeries monomial(cplx a, std::size_t k, std::size_t order);

    std::size_t order() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<cplx>& coeffs() const { return c_; }
    cplx operator[](std::size_t k) const { return k < c_.size() ? c_[k] : cplx(0.0); }
    cplx& operator[](std::size_t k) { return c_[k]; }

    cplx eval(cplx z) const;
    cplx eval_derivative(cplx z) const;

    PowerSeries derivative() const;            // order K-1
    PowerSeries integral(cplx c0 = 0.0) const;  // order K+1
    PowerSeries truncated(std::size_t order) const;

    // Energy fraction held by the last m coefficients.
    double tail_fraction(std::size_t m = 8) const;

    // Values on |z| = r at n uniform angles.
    std::vector<cplx> on_circle(std::size_t n, double r = 1.0) const;

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries& operator*=(cplx a);

private:
    std::vector<cplx> c_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(cplx a, PowerSeries b);

PowerSeries mul(const PowerSeries& a, const PowerSeries& b, std::size_t order);
// Throws ReciprocalError when |c_0| <= 1e-12.
PowerSeries reciprocal(const PowerSeries& a, std::size_t order);

// Horner on raw coefficient vectors.
cplx horner(const std::vector<cplx>& c, cplx z);
cplx horner_derivative(const std::vector<cplx>& c, cplx z);

}  // namespace harmap
