#include "harmap/dirichlet.hpp"

#include "fft.hpp"
#include "harmap/errors.hpp"

#include <algorithm>
#include <limits>

namespace harmap {

BoundaryCurve::BoundaryCurve(const std::vector<double>& phi, const std::vector<double>& psi) {
    if (phi.size() != psi.size()) throw InputError("phi and psi differ in length");
    std::vector<cplx> z(phi.size());
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = cplx(phi[j], psi[j]);
    z_ = PeriodicSamples(std::move(z));
}

HarmonicMap solve(const BoundaryCurve& phi, Warnings* warn) {
    const auto& s = phi.samples();
    if (warn) {
        double t = tail_mass(s);
        if (t > kTailTolerance)
            warn->push_back("TailWarning: spectral tail mass " + std::to_string(t) +
                            " above tolerance");
    }
    const std::size_t n = s.size();
    auto c = detail::dft_coeffs(s.values());
    const std::size_t k_max = n / 2 - 1;  // Nyquist dropped
    HarmonicMap u;
    u.g.assign(k_max + 1, cplx(0.0));
    u.h.assign(k_max + 1, cplx(0.0));
    // Constant split evenly so that Im(a_0 - b_0) = 0.
    u.g[0] = 0.5 * c[0];
    u.h[0] = 0.5 * std::conj(c[0]);
    for (std::size_t k = 1; k <= k_max; ++k) {
        u.g[k] = c[k];
        u.h[k] = std::conj(c[n - k]);
    }
    return u;
}

namespace {

cplx clamp_disk(cplx z) {
    const double r = std::abs(z);
    if (r > 1.0 + 1e-12) throw DomainError("point outside the closed unit disk");
    return r > 1.0 ? z / r : z;
}

}  // namespace

cplx eval(const HarmonicMap& u, cplx z) {
    z = clamp_disk(z);
    return horner(u.g, z) + std::conj(horner(u.h, z));
}

void eval_derivatives(const HarmonicMap& u, cplx z, cplx& uz, cplx& uzbar) {
    z = clamp_disk(z);
    uz = horner_derivative(u.g, z);
    uzbar = std::conj(horner_derivative(u.h, z));
}

double eval_jacobian(const HarmonicMap& u, cplx z) {
    cplx a, b;
    eval_derivatives(u, z, a, b);
    return std::norm(a) - std::norm(b);
}

namespace {

// Values of sum c_k r^k e^{ik theta_j} on n uniform angles.
std::vector<cplx> circle_values(const std::vector<cplx>& c, std::size_t n, double r) {
    if (c.size() > n) {  // grid too coarse to hold the degree
        std::vector<cplx> v(n);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = horner(c, std::polar(r, PeriodicSamples::theta_of(j, n)));
        return v;
    }
    std::vector<cplx> buf(n, cplx(0.0));
    double rk = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        buf[k % n] += c[k] * rk;
        rk *= r;
    }
    return detail::dft_synth(buf);
}

std::vector<cplx> deriv_coeffs(const std::vector<cplx>& c) {
    if (c.size() <= 1) return {cplx(0.0)};
    std::vector<cplx> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    return d;
}

}  // namespace

JacobianField jacobian_field(const HarmonicMap& u, std::size_t rings, std::size_t spokes) {
    if (rings < 1 || spokes < 8) throw InputError("jacobian_field needs rings >= 1, spokes >= 8");
    JacobianField f;
    f.rings = rings;
    f.spokes = spokes;
    f.det.resize(rings * spokes);
    f.min = std::numeric_limits<double>::infinity();
    const auto dg = deriv_coeffs(u.g);
    const auto dh = deriv_coeffs(u.h);
    // FFT evaluation needs the grid to hold the degree; fall back to Horner otherwise.
    const bool use_fft = is_pow2(spokes);
    for (std::size_t i = 0; i < rings; ++i) {
        const double r = static_cast<double>(i + 1) / static_cast<double>(rings + 1);
        f.radii.push_back(r);
        std::vector<cplx> gv, hv;
        if (use_fft) {
            gv = circle_values(dg, spokes, r);
            hv = circle_values(dh, spokes, r);
        }
        for (std::size_t j = 0; j < spokes; ++j) {
            const cplx z = std::polar(r, PeriodicSamples::theta_of(j, spokes));
            const double d = use_fft ? std::norm(gv[j]) - std::norm(hv[j])
                                     : std::norm(horner(dg, z)) - std::norm(horner(dh, z));
            f.det[i * spokes + j] = d;
            if (d < f.min) {
                f.min = d;
                f.argmin = z;
            }
        }
    }
    return f;
}

PowerSeries analytic_f(const HarmonicMap& u) { return f_alpha(u, 0.0); }

PowerSeries f_alpha(const HarmonicMap& u, double alpha) {
    const std::size_t n = std::max(u.g.size(), u.h.size());
    const cplx eg = std::polar(1.0, -alpha);
    const cplx eh = std::polar(1.0, alpha);
    std::vector<cplx> c(n, cplx(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = k < u.g.size() ? u.g[k] : cplx(0.0);
        const cplx b = k < u.h.size() ? u.h[k] : cplx(0.0);
        c[k] = alpha == 0.0 ? a + b : eg * a + eh * b;
    }
    return PowerSeries(std::move(c));
}

std::vector<cplx> boundary_values(const HarmonicMap& u, std::size_t n) {
    if (!is_pow2(n)) throw InputError("boundary grid must be a power of two");
    auto g = circle_values(u.g, n, 1.0);
    // conj(H(e^{i theta})) on the same grid
    auto h = circle_values(u.h, n, 1.0);
    for (std::size_t j = 0; j < n; ++j) g[j] += std::conj(h[j]);
    return g;
}

std::vector<double> boundary_jacobian_of(const HarmonicMap& u, std::size_t n) {
    if (!is_pow2(n)) throw InputError("boundary grid must be a power of two");
    auto gv = circle_values(deriv_coeffs(u.g), n, 1.0);
    auto hv = circle_values(deriv_coeffs(u.h), n, 1.0);
    std::vector<double> j(n);
    for (std::size_t k = 0; k < n; ++k) j[k] = std::norm(gv[k]) - std::norm(hv[k]);
    return j;
}

}  // namespace harmap
