#pragma once

#include "harmap/dirichlet.hpp"
#include "harmap/series.hpp"
#include "harmap/spectral.hpp"

#include <vector>

namespace harmap {

// Domain {center + r e^{i theta} : r < rho(theta)}.
struct StarlikeBoundary {
    cplx center = 0.0;
    PeriodicSamples rho;  // real, positive, on the uniform theta grid

    StarlikeBoundary() = default;
    StarlikeBoundary(cplx c, PeriodicSamples r);
};

// Polar form of a closed curve about center; NonstarlikeError unless the
// polar angle of the curve increases monotonically through one turn.
StarlikeBoundary to_polar(const BoundaryCurve& curve, cplx center, std::size_t n = 0);

struct ConformalMap {
    cplx center = 0.0;
    std::vector<double> sigma;  // boundary polar angle at t_j, increasing by 2 pi per turn
    PowerSeries taylor;
    FourierCoeffs log_rho;
    double residual = 0.0;
    int iterations = 0;
    double leakage = 0.0;  // l2 ratio of negative-frequency boundary content
    double epsilon = 0.0;  // max |rho'/rho|

    double rho_at(double theta) const;
};

inline constexpr double kTheodorsenTol = 1e-10;
inline constexpr int kTheodorsenMaxIter = 200;

// Under-relaxed fixed point of sigma(t) = t + H[log rho(sigma)](t).
ConformalMap theodorsen(const StarlikeBoundary& b, double tol = kTheodorsenTol,
                        int max_iter = kTheodorsenMaxIter);

cplx eval_conformal(const ConformalMap& m, cplx z);
cplx eval_conformal_derivative(const ConformalMap& m, cplx z);

// t with map(e^{it}) = w for w on (or within 1e-6 relative of) the image boundary.
double invert_boundary(const ConformalMap& m, cplx w, double tol = 1e-8);
// z in the disk with map(z) = w for interior w.
cplx invert_interior(const ConformalMap& m, cplx w, double tol = 1e-12);

}  // namespace harmap
