#include "harmap/topology.hpp"

#include "fft.hpp"
#include "harmap/errors.hpp"

#include <algorithm>
#include <numbers>

namespace harmap {

namespace {

constexpr double kPi = std::numbers::pi;

// Sum of wrapped argument increments / 2 pi; false if some step reaches pi/2.
bool arg_sum(const std::vector<cplx>& p, double& turns) {
    const std::size_t n = p.size();
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = std::arg(p[(j + 1) % n] / p[j]);
        if (std::abs(d) >= kPi / 2) return false;
        total += d;
    }
    turns = total / (2.0 * kPi);
    return true;
}

int round_turns(double turns) {
    const double r = std::round(turns);
    if (std::abs(turns - r) >= 0.05)
        throw NonintegerError("winding residual " + std::to_string(turns - r));
    return static_cast<int>(r);
}

std::vector<cplx> circle_values(const std::vector<cplx>& c, std::size_t n, double r) {
    std::vector<cplx> buf(n, cplx(0.0));
    double rk = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        buf[k % n] += c[k] * rk;
        rk *= r;
    }
    return detail::dft_synth(buf);
}

}  // namespace

int winding_number(const SampledLoop& loop) {
    const auto& p = loop.points;
    if (p.size() < 3) throw InputError("loop needs at least 3 points");
    double mx = 0.0;
    for (const auto& z : p) mx = std::max(mx, std::abs(z));
    for (const auto& z : p)
        if (std::abs(z) <= 1e-14 * mx || mx == 0.0) throw ZeroOnContourError("loop passes through the origin");
    double turns = 0.0;
    if (!arg_sum(p, turns)) throw UndersampledError("argument increment >= pi/2");
    return round_turns(turns);
}

int curve_winding(const BoundaryCurve& phi, Warnings* warn) {
    auto d = diff_theta(phi.samples(), warn);
    return winding_number(SampledLoop{d.values()});
}

int zeros_in_disk(const PowerSeries& h, double r) {
    if (r <= 0.0 || r > 1.0) throw InputError("radius must lie in (0, 1]");
    const auto& c = h.coeffs();
    std::size_t deg = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != cplx(0.0)) deg = k;
    std::size_t m = std::max<std::size_t>(256, next_pow2(8 * (deg + 1)));
    constexpr std::size_t kMaxGrid = std::size_t(1) << 22;
    for (;;) {
        const auto v = circle_values(c, m, r);
        double lo = std::abs(v[0]), hi = lo;
        for (const auto& x : v) {
            lo = std::min(lo, std::abs(x));
            hi = std::max(hi, std::abs(x));
        }
        if (hi == 0.0 || lo < 1e-9 * hi) throw ZeroOnContourError("function nearly vanishes on the contour");
        double turns = 0.0;
        if (arg_sum(v, turns)) return round_turns(turns);
        if (m >= kMaxGrid) throw UndersampledError("contour argument not resolved");
        m *= 2;
    }
}

int critical_count(const HarmonicMap& u, double alpha) {
    return zeros_in_disk(f_alpha(u, alpha).derivative(), 1.0);
}

WindingReport wn_identity_check(const HarmonicMap& u, const BoundaryCurve& phi) {
    const std::size_t n = std::max<std::size_t>(phi.size(), next_pow2(4 * (u.order() + 1)));
    const auto jb = boundary_jacobian_of(u, n);
    if (*std::min_element(jb.begin(), jb.end()) <= 0.0)
        throw PreconditionError("boundary Jacobian is not strictly positive");

    WindingReport rep;
    // Tangent loop of f on the circle: i e^{i theta} f'(e^{i theta}), refined until resolved.
    const auto fp = analytic_f(u).derivative();
    for (std::size_t m = n;; m *= 2) {
        auto v = circle_values(fp.coeffs(), m, 1.0);
        for (std::size_t j = 0; j < m; ++j) v[j] *= cplx(0.0, 1.0) * std::polar(1.0, PeriodicSamples::theta_of(j, m));
        try {
            rep.wn_f = winding_number(SampledLoop{std::move(v)});
            break;
        } catch (const UndersampledError&) {
            if (m >= (std::size_t(1) << 22)) throw;
        }
    }
    rep.wn_phi = curve_winding(phi);
    rep.m = critical_count(u, 0.0);
    rep.consistent = rep.wn_f == rep.wn_phi && rep.m == rep.wn_f - 1;
    return rep;
}

}  // namespace harmap
