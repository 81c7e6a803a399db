#pragma once

#include "harmap/spectral.hpp"

#include <Eigen/Dense>

#include <vector>

namespace harmap {

// Riemann map R of a smooth Jordan domain onto the disk via the Kerzman-Stein
// integral equation for the Szego kernel; R(a) = 0 and R'(a) > 0.
// Nodes z_j = Gamma(s_j) at uniform s_j with dz_j = dGamma/ds, counter-clockwise.
class SzegoMap {
public:
    SzegoMap(std::vector<cplx> z, std::vector<cplx> dz);

    // Boundary values R(z_j) for the interior point a (the matrix is factored once).
    void solve(cplx a);

    const std::vector<cplx>& boundary_values() const { return r_; }
    // arg R(z_j), unwrapped along j.
    const std::vector<double>& boundary_angles() const { return t_; }
    // Barycentric Cauchy interpolant of R inside the domain.
    cplx forward(cplx zeta) const;
    cplx interior_point() const { return a_; }
    std::size_t size() const { return z_.size(); }

private:
    std::vector<cplx> z_, dz_, tan_;
    std::vector<double> wgt_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    cplx a_ = 0.0;
    std::vector<cplx> r_;
    std::vector<double> t_;
};

}  // namespace harmap
