#pragma once

#include "harmap/spectral.hpp"

#include <vector>

namespace harmap {

// Closed curve s -> sum_{k=lo}^{hi} c_k e^{iks}, evaluated off the grid.
class TrigCurve {
public:
    TrigCurve() = default;
    TrigCurve(long lo, std::vector<cplx> c) : lo_(lo), c_(std::move(c)) {}

    // Band-limited interpolant of the samples; the Nyquist mode is split between +-N/2
    // and modes below rel_tol * max |c| at the spectrum edges are trimmed.
    static TrigCurve from_samples(const PeriodicSamples& s, double rel_tol = 1e-15);

    cplx eval(double s) const;
    cplx deriv(double s) const;
    cplx deriv2(double s) const;
    // gamma(s0 + d) - gamma(s0) without cancellation for small d.
    cplx increment(double s0, double d) const;

    // s -> -s
    TrigCurve reversed() const;
    // z -> a z + b conj(z) + c, the general real-affine map of the plane.
    TrigCurve real_affine(cplx a, cplx b, cplx c) const;

    std::vector<cplx> sample(std::size_t n) const;

    long lowest() const { return lo_; }
    long highest() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    cplx coeff(long k) const;

private:
    template <class W>
    cplx sum(double s, W weight) const;

    long lo_ = 0;
    std::vector<cplx> c_;
};

}  // namespace harmap
