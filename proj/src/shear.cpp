#include "harmap/shear.hpp"

#include "harmap/errors.hpp"
#include "harmap/geometry.hpp"
#include "harmap/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace harmap {

DilatationSpec make_dilatation(PowerSeries omega) {
    DilatationSpec s;
    const auto v = omega.on_circle(kDilatationGrid);
    for (const auto& x : v) s.sup_bound = std::max(s.sup_bound, std::abs(x));
    s.omega = std::move(omega);
    return s;
}

namespace {

// Smallest adjustment of g so that fl(g + h) == f, when one exists nearby.
double nudge(double f, double h) {
    double g = f - h;
    for (int it = 0; it < 64; ++it) {
        const double s = g + h;
        if (s == f) return g;
        g = std::nextafter(g, s < f ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity());
    }
    return f - h;
}

}  // namespace

HarmonicMap shear_construct(const PowerSeries& f, const DilatationSpec& omega, std::size_t order) {
    if (order < 2) throw InputError("shear order must be >= 2");
    if (omega.sup_bound >= 1.0 - 1e-9)
        throw DilatationBoundError("sup |omega| = " + std::to_string(omega.sup_bound) + " is not below 1");
    const auto fp = f.derivative().truncated(order - 1);
    {
        const auto v = fp.on_circle(kDilatationGrid);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (const auto& x : v) {
            lo = std::min(lo, std::abs(x));
            hi = std::max(hi, std::abs(x));
        }
        if (hi == 0.0 || lo <= 1e-12 * hi) throw PreconditionError("f' vanishes on the boundary grid");
    }
    auto one_plus = omega.omega.truncated(order - 1);
    one_plus[0] += 1.0;
    const auto recip = reciprocal(one_plus, order - 1);
    if (recip.tail_fraction(8) > 1e-10)
        throw TruncationError("reciprocal series tail " + std::to_string(recip.tail_fraction(8)) +
                              " exceeds tolerance at order " + std::to_string(order));
    const auto gp = mul(fp, recip, order - 1);
    const auto hp = mul(omega.omega, gp, order - 1);
    if (gp.tail_fraction(8) > 1e-10 || hp.tail_fraction(8) > 1e-10)
        throw TruncationError("derivative series tail exceeds tolerance at order " + std::to_string(order));

    const auto hs = hp.integral(0.0);  // H(0) = 0
    HarmonicMap u;
    u.h = hs.coeffs();
    u.g.resize(std::max(u.h.size(), f.coeffs().size()), cplx(0.0));
    u.h.resize(u.g.size(), cplx(0.0));
    for (std::size_t k = 0; k < u.g.size(); ++k) {
        const cplx fk = f[k], hk = u.h[k];
        u.g[k] = cplx(nudge(fk.real(), hk.real()), nudge(fk.imag(), hk.imag()));
    }
    return u;
}

PowerSeries dilatation(const HarmonicMap& u) {
    const auto gp = PowerSeries(u.g).derivative();
    const auto hp = PowerSeries(u.h).derivative();
    const std::size_t k = std::max(gp.order(), hp.order());
    return mul(hp, reciprocal(gp, k), k);
}

double sup_distance(const PowerSeries& a, const PowerSeries& b, std::size_t n) {
    const auto d = (a - b).on_circle(n);
    double m = 0.0;
    for (const auto& x : d) m = std::max(m, std::abs(x));
    return m;
}

UnivalenceReport check_univalent(const PowerSeries& f, std::size_t n) {
    UnivalenceReport r;
    try {
        r.derivative_zeros = zeros_in_disk(f.derivative(), 1.0);
    } catch (const ZeroOnContourError&) {
        r.derivative_zeros = -1;
    }
    r.boundary_simple = geom::is_simple_polygon(f.on_circle(n));
    r.univalent = r.derivative_zeros == 0 && r.boundary_simple;
    return r;
}

EquivalenceReport verify_equivalences(const HarmonicMap& u) {
    EquivalenceReport r;
    const std::size_t n = std::max<std::size_t>(1024, next_pow2(8 * (u.order() + 1)));
    const auto jb = boundary_jacobian_of(u, n);
    r.jacobian_positive_boundary = *std::min_element(jb.begin(), jb.end()) > 0.0;
    r.indeterminate = !r.jacobian_positive_boundary;
    r.u_boundary_injective = geom::is_simple_polygon(boundary_values(u, n));
    r.f_boundary_injective = geom::is_simple_polygon(analytic_f(u).on_circle(n));
    r.all_consistent = !r.indeterminate && r.u_boundary_injective == r.f_boundary_injective;
    return r;
}

}  // namespace harmap
