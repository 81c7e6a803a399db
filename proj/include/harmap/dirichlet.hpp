#pragma once

#include "harmap/series.hpp"
#include "harmap/spectral.hpp"

#include <vector>

namespace harmap {

// Boundary map Phi = phi + i psi sampled on the uniform circle grid.
class BoundaryCurve {
public:
    BoundaryCurve() = default;
    explicit BoundaryCurve(PeriodicSamples z) : z_(std::move(z)) {}
    BoundaryCurve(const std::vector<double>& phi, const std::vector<double>& psi);

    template <class F>
    static BoundaryCurve sample(std::size_t n, F&& f) {
        return BoundaryCurve(PeriodicSamples::sample(n, std::forward<F>(f)));
    }

    std::size_t size() const { return z_.size(); }
    const PeriodicSamples& samples() const { return z_; }
    const std::vector<cplx>& points() const { return z_.values(); }
    std::vector<double> phi() const { return z_.real_part(); }
    std::vector<double> psi() const { return z_.imag_part(); }

private:
    PeriodicSamples z_;
};

// U = G + conj(H) with Taylor coefficients of G and H.
struct HarmonicMap {
    std::vector<cplx> g;
    std::vector<cplx> h;

    std::size_t order() const { return std::max(g.size(), h.size()) - 1; }
};

struct JacobianField {
    std::size_t rings = 0;
    std::size_t spokes = 0;
    std::vector<double> radii;
    std::vector<double> det;  // det[i * spokes + j] at radii[i] e^{i theta_j}
    double min = 0.0;
    cplx argmin = 0.0;

    double at(std::size_t ring, std::size_t spoke) const { return det[ring * spokes + spoke]; }
};

HarmonicMap solve(const BoundaryCurve& phi, Warnings* warn = nullptr);

cplx eval(const HarmonicMap& u, cplx z);
double eval_jacobian(const HarmonicMap& u, cplx z);
// G'(z) and conj(H'(z)), i.e. U_z and U_zbar.
void eval_derivatives(const HarmonicMap& u, cplx z, cplx& uz, cplx& uzbar);

// Ring radii r_i = (i+1)/(rings+1), spokes at theta_j = 2 pi j / spokes.
JacobianField jacobian_field(const HarmonicMap& u, std::size_t rings, std::size_t spokes);

PowerSeries analytic_f(const HarmonicMap& u);
PowerSeries f_alpha(const HarmonicMap& u, double alpha);

// Values of U on the unit circle at n uniform angles.
std::vector<cplx> boundary_values(const HarmonicMap& u, std::size_t n);
// |G'|^2 - |H'|^2 on the unit circle at n uniform angles.
std::vector<double> boundary_jacobian_of(const HarmonicMap& u, std::size_t n);

}  // namespace harmap
