#include "harmap/choquet.hpp"

#include "fft.hpp"
#include "harmap/certify.hpp"
#include "harmap/errors.hpp"
#include "harmap/geometry.hpp"
#include "harmap/szego.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace harmap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);

double wrap_into(double x, double lo) {
    double y = std::fmod(x - lo, kTwoPi);
    if (y < 0) y += kTwoPi;
    return lo + y;
}

using Mat2 = std::array<std::array<double, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2 inv(const Mat2& a) {
    const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det == 0.0) throw DegenerateCurveError("singular normalization");
    return {{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
}

// Im(conj(gamma - E) gamma'): zero where the ray from E is tangent to the curve.
double tangency(const TrigCurve& c, cplx e, double s) { return (std::conj(c.eval(s) - e) * c.deriv(s)).imag(); }

double refine_tangent(const TrigCurve& c, cplx e, double s0, double h) {
    double lo = s0 - h, hi = s0 + h;
    double flo = tangency(c, e, lo), fhi = tangency(c, e, hi);
    if ((flo > 0) == (fhi > 0)) return s0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = tangency(c, e, mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Damped Newton for w(z) = target inside the unit disk.
bool newton_solve(const PowerSeries& w, cplx target, cplx& z, double tol = 1e-13) {
    const double scale = std::max(1.0, std::abs(target));
    double res = std::abs(w.eval(z) - target);
    for (int it = 0; it < 100 && res > tol * scale; ++it) {
        const cplx step = (w.eval(z) - target) / w.eval_derivative(z);
        double lam = 1.0;
        bool moved = false;
        for (int k = 0; k < 40; ++k, lam *= 0.5) {
            const cplx zn = z - lam * step;
            if (std::abs(zn) >= 1.0) continue;
            const double rn = std::abs(w.eval(zn) - target);
            if (rn < res) {
                z = zn;
                res = rn;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return res <= 1e-11 * scale;
}

// Continuation from z (with w(z) known) to target along a straight path in the image.
bool continue_to(const PowerSeries& w, cplx target, cplx& z, int steps) {
    const cplx from = w.eval(z);
    for (int k = 1; k <= steps; ++k) {
        const cplx t = from + (target - from) * (double(k) / steps);
        if (!newton_solve(w, t, z)) return false;
    }
    return true;
}

// Crossings of the closed polygon with the line x = x0, as y values.
std::vector<double> vertical_crossings(const std::vector<cplx>& poly, double x0) {
    std::vector<double> ys;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx a = poly[i], b = poly[(i + 1) % n];
        if ((a.real() > x0) != (b.real() > x0)) {
            const double t = (x0 - a.real()) / (b.real() - a.real());
            ys.push_back(a.imag() + t * (b.imag() - a.imag()));
        }
    }
    return ys;
}

}  // namespace

cplx base_map_F(cplx z) { return {z.real(), z.real() * z.real() - z.imag() * z.imag()}; }

cplx F_inverse_branch(cplx w, int sign) {
    const double q = w.real() * w.real() - w.imag();
    if (q < -1e-12) throw DomainError("point lies above the parabola v = u^2");
    const double y = std::sqrt(std::max(q, 0.0));
    return {w.real(), sign >= 0 ? y : -y};
}

cplx AffineMap::linear(cplx w) const {
    return {m[0][0] * w.real() + m[0][1] * w.imag(), m[1][0] * w.real() + m[1][1] * w.imag()};
}

AffineMap AffineMap::inverse() const {
    AffineMap r;
    r.m = inv(m);
    r.offset = -r.linear(offset);
    return r;
}

cplx AffineMap::holomorphic_part() const {
    return {(m[0][0] + m[1][1]) / 2.0, (m[1][0] - m[0][1]) / 2.0};
}

cplx AffineMap::antiholomorphic_part() const {
    return {(m[0][0] - m[1][1]) / 2.0, (m[1][0] + m[0][1]) / 2.0};
}

ChoquetScaffold build_scaffold(const BoundaryCurve& d) {
    ChoquetScaffold sc;
    std::vector<cplx> pts = d.points();
    const std::size_t n = pts.size();
    if (n < 16) throw InputError("target needs at least 16 samples");
    if (!geom::is_simple_polygon(pts)) throw InputError("target curve is not simple");
    sc.target = TrigCurve::from_samples(d.samples());
    if (geom::signed_area(pts) < 0) {
        sc.reversed = true;
        sc.target = sc.target.reversed();
        std::vector<cplx> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = pts[(n - j) % n];
        pts = std::move(r);
    }
    const BoundaryCurve oriented{PeriodicSamples(pts)};
    const auto part = convex_partition(oriented);
    if (part.gamma_nc_indices.empty()) throw ConvexInputError("target is convex: no non-convex boundary part");
    const double diam = geom::diameter(pts);

    // bridge: longest hull edge spanning a pocket whose open segment stays off the target
    std::optional<std::pair<std::size_t, std::size_t>> best;
    double best_len = 0.0, best_clear = 0.0;
    const auto& hull = part.hull;
    for (std::size_t k = 0; k < hull.size(); ++k) {
        const std::size_t a = hull[k], b = hull[(k + 1) % hull.size()];
        const std::size_t gap = (b + n - a) % n;
        if (gap < 2) continue;
        bool pocket = false;
        for (std::size_t j = 1; j < gap && !pocket; ++j) pocket = !part.in_gamma_c[(a + j) % n];
        if (!pocket) continue;
        double clear = std::numeric_limits<double>::infinity();
        for (int t = 1; t < 64; ++t) {
            const cplx q = pts[a] + (pts[b] - pts[a]) * (double(t) / 64.0);
            if (geom::point_in_polygon(pts, q)) {
                clear = 0.0;
                break;
            }
            clear = std::min(clear, geom::distance_to_polygon(pts, q));
        }
        if (clear <= 1e-12 * diam) continue;
        const double len = std::abs(pts[b] - pts[a]);
        if (!best || len > best_len) {
            best = {a, b};
            best_len = len;
            best_clear = clear;
        }
    }
    if (!best) throw NoBridgeError("no hull edge clears the target at sample resolution");
    sc.ia = best->first;
    sc.ib = best->second;
    sc.segment_clearance = best_clear;
    sc.A = pts[sc.ia];
    sc.B = pts[sc.ib];
    sc.C = 0.5 * (sc.A + sc.B);
    const cplx nrm = kI * (sc.B - sc.A) / std::abs(sc.B - sc.A);
    const auto hit = geom::ray_polygon_hit(pts, sc.C, nrm);
    if (!hit) throw DegenerateCurveError("inward perpendicular from the bridge misses the target");
    sc.E = sc.C + 0.5 * *hit * nrm;

    // angular extent of the target seen from E
    std::vector<double> ang(n + 1);
    ang[0] = std::arg(pts[0] - sc.E);
    for (std::size_t j = 1; j <= n; ++j) ang[j] = ang[j - 1] + std::arg((pts[j % n] - sc.E) / (pts[j - 1] - sc.E));
    if (std::abs(ang[n] - ang[0]) > 1e-6) throw DegenerateCurveError("cone vertex is not outside the target");
    const auto jmax = static_cast<std::size_t>(std::max_element(ang.begin(), ang.end() - 1) - ang.begin());
    const auto jmin = static_cast<std::size_t>(std::min_element(ang.begin(), ang.end() - 1) - ang.begin());
    const double h = kTwoPi / double(n);
    sc.sA = wrap_into(refine_tangent(sc.target, sc.E, PeriodicSamples::theta_of(jmax, n), h), 0.0);
    sc.sB = wrap_into(refine_tangent(sc.target, sc.E, PeriodicSamples::theta_of(jmin, n), h), 0.0);
    sc.A1 = sc.target.eval(sc.sA);
    sc.B1 = sc.target.eval(sc.sB);
    sc.aperture = kTwoPi - wrap_into(std::arg((sc.A1 - sc.E) / (sc.B1 - sc.E)), 0.0);
    if (sc.aperture < 1e-6) throw DegenerateCurveError("cone of zero aperture");
    if (sc.aperture >= kPi - 1e-9) throw DegenerateCurveError("cone aperture reaches pi");
    sc.alpha = std::arg(sc.A1 - sc.E);
    sc.beta = sc.alpha + sc.aperture;
    {
        // the cone must contain the direction back toward the bridge
        const double dc = wrap_into(std::arg(sc.C - sc.E), sc.alpha);
        if (dc - sc.alpha > sc.aperture) throw DegenerateCurveError("cone does not face the bridge");
    }

    // rotate the bisector to +v, equalize the rays, then scale onto the parabola
    const double hw = 0.5 * sc.aperture;
    const double rho = kPi / 2.0 - (sc.alpha + hw);
    const cplx rot = std::polar(1.0, rho);
    const cplx a0 = (sc.A1 - sc.E) * rot, b0 = (sc.B1 - sc.E) * rot;
    const cplx ua = std::polar(1.0, kPi / 2.0 - hw), ub = std::polar(1.0, kPi / 2.0 + hw);
    const Mat2 basis{{{ua.real(), ub.real()}, {ua.imag(), ub.imag()}}};
    const Mat2 eq = mul(mul(basis, Mat2{{{1.0 / std::abs(a0), 0.0}, {0.0, 1.0 / std::abs(b0)}}}), inv(basis));
    const double p = sc.p;
    const Mat2 sc_m{{{p / std::sin(hw), 0.0}, {0.0, 2.0 * p * p / std::cos(hw)}}};
    const Mat2 r_m{{{std::cos(rho), -std::sin(rho)}, {std::sin(rho), std::cos(rho)}}};
    sc.affine.m = mul(mul(sc_m, eq), r_m);
    sc.affine.offset = -sc.affine.linear(sc.E) - kI * (p * p);
    sc.normalized = sc.target.real_affine(sc.affine.holomorphic_part(), sc.affine.antiholomorphic_part(),
                                          sc.affine.offset);

    // invariants on a dense sample of the normalized target
    const auto dense = sc.normalized.sample(std::max<std::size_t>(4096, n));
    const double ndiam = geom::diameter(dense);
    sc.cone_excess = -std::numeric_limits<double>::infinity();
    sc.parabola_excess = -std::numeric_limits<double>::infinity();
    for (const auto& w : dense) {
        sc.cone_excess = std::max(sc.cone_excess, w.imag() + p * p - 2.0 * p * std::abs(w.real()));
        sc.parabola_excess = std::max(sc.parabola_excess, w.imag() - w.real() * w.real());
    }
    const double tol = 1e-9 * ndiam;
    if (sc.cone_excess > tol) throw DegenerateCurveError("target enters the cone");
    if (sc.parabola_excess > tol) throw DegenerateCurveError("target crosses the parabola");
    if (std::abs(sc.affine.apply(sc.A1) - cplx(p, p * p)) > tol ||
        std::abs(sc.affine.apply(sc.B1) - cplx(-p, p * p)) > tol)
        throw DegenerateCurveError("normalization misses the contact points");
    return sc;
}

GluedCurve::GluedCurve(const ChoquetScaffold& s)
    : n_(s.normalized), sA_(s.sA), sB_(s.sB), p_(s.p), l1_(wrap_into(s.sB - s.sA, 0.0)) {}

bool GluedCurve::upper(double sigma) const { return wrap_into(sigma, 0.0) < l1_; }

double GluedCurve::uq(double sigma, double& u) const {
    const double dA = std::remainder(sigma, kTwoPi);
    const double dB = std::remainder(sigma - l1_, kTwoPi);
    const bool at_a = std::abs(dA) <= std::abs(dB);
    const double s0 = at_a ? sA_ : sB_;
    const double u0 = at_a ? p_ : -p_;
    const cplx inc = n_.increment(s0, at_a ? dA : dB);
    u = u0 + inc.real();
    return 2.0 * u0 * inc.real() + inc.real() * inc.real() - inc.imag();
}

cplx GluedCurve::eval(double sigma) const {
    double u;
    const double y = std::sqrt(std::max(uq(sigma, u), 0.0));
    return {u, upper(sigma) ? y : -y};
}

cplx GluedCurve::deriv(double sigma) const {
    const double dA = std::abs(std::remainder(sigma, kTwoPi));
    const double dB = std::abs(std::remainder(sigma - l1_, kTwoPi));
    if (std::min(dA, dB) < 1e-3) {
        const double h = 1e-4;
        return (-eval(sigma + 2 * h) + 8.0 * eval(sigma + h) - 8.0 * eval(sigma - h) + eval(sigma - 2 * h)) /
               (12.0 * h);
    }
    const cplx w = n_.eval(sA_ + sigma), dw = n_.deriv(sA_ + sigma);
    double u;
    double q = uq(sigma, u);
    const double y = std::sqrt(std::max(q, 0.0));
    const double dq = 2.0 * w.real() * dw.real() - dw.imag();
    const double dy = dq / (2.0 * y);
    return {dw.real(), upper(sigma) ? dy : -dy};
}

namespace {

// Arc-length-proportional resampling: sigma in [0, l1] onto theta in [0, pi), the rest onto [pi, 2 pi).
BoundaryCurve resample_glued(const GluedCurve& g, std::size_t n) {
    const std::size_t dense = 8192;
    std::vector<cplx> out;
    out.reserve(n);
    const double arcs[2][2] = {{0.0, g.junction()}, {g.junction(), kTwoPi}};
    for (const auto& arc : arcs) {
        std::vector<cplx> p(dense + 1);
        std::vector<double> sg(dense + 1), len(dense + 1, 0.0);
        for (std::size_t i = 0; i <= dense; ++i) {
            sg[i] = arc[0] + (arc[1] - arc[0]) * double(i) / double(dense);
            p[i] = g.eval(sg[i]);
            if (i) len[i] = len[i - 1] + std::abs(p[i] - p[i - 1]);
        }
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double target = len[dense] * double(k) / double(n / 2);
            auto it = std::upper_bound(len.begin(), len.end(), target);
            const std::size_t i = std::clamp<std::size_t>(static_cast<std::size_t>(it - len.begin()), 1, dense) - 1;
            const double span = len[i + 1] - len[i];
            const double t = span > 0 ? (target - len[i]) / span : 0.0;
            out.push_back(g.eval(sg[i] + t * (sg[i + 1] - sg[i])));
        }
    }
    return BoundaryCurve(PeriodicSamples(std::move(out)));
}

struct Candidate {
    PowerSeries omega;
    std::vector<cplx> gamma_n;
    std::vector<cplx> phi;
    double x1 = 0.0, x2 = 0.0;
};

std::optional<Candidate> try_candidate(const std::vector<cplx>& c, std::size_t order, std::string& why) {
    Candidate k;
    k.omega = PowerSeries(std::vector<cplx>(c.begin(), c.begin() + static_cast<long>(order)));
    k.gamma_n = k.omega.on_circle(kPhiSamples);
    if (!geom::is_simple_polygon(k.gamma_n)) {
        why = "truncated Gamma is not simple";
        return std::nullopt;
    }
    std::vector<std::size_t> cross;
    for (std::size_t j = 0; j < kPhiSamples; ++j) {
        const double a = k.gamma_n[j].imag(), b = k.gamma_n[(j + 1) % kPhiSamples].imag();
        if ((a > 0) != (b > 0)) cross.push_back(j);
    }
    if (cross.size() != 2) {
        why = "truncated Gamma crosses the real axis " + std::to_string(cross.size()) + " times";
        return std::nullopt;
    }
    std::vector<double> xs;
    for (auto j : cross) {
        double lo = PeriodicSamples::theta_of(j, kPhiSamples), hi = lo + kTwoPi / double(kPhiSamples);
        const bool pos = k.gamma_n[j].imag() > 0;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            if ((k.omega.eval(std::polar(1.0, mid)).imag() > 0) == pos)
                lo = mid;
            else
                hi = mid;
        }
        xs.push_back(k.omega.eval(std::polar(1.0, 0.5 * (lo + hi))).real());
    }
    std::sort(xs.begin(), xs.end());
    k.x1 = xs[0];
    k.x2 = xs[1];
    k.phi.resize(kPhiSamples);
    for (std::size_t j = 0; j < kPhiSamples; ++j) k.phi[j] = base_map_F(k.gamma_n[j]);
    const auto reg = check_regularity(BoundaryCurve(PeriodicSamples(k.phi)));
    if (!reg.is_simple || !reg.is_c1_diffeo || reg.orientation != 1) {
        why = "boundary map is not a positively oriented simple C1 curve";
        return std::nullopt;
    }
    return k;
}

}  // namespace

// Highest truncation first: 1024 keeps Phi below the Nyquist limit of kPhiSamples.
constexpr std::size_t kTaylorOrders[] = {1024, 768, 512, 384, 256};

CounterexampleBundle build_counterexample(const BoundaryCurve& d) {
    CounterexampleBundle b;
    b.scaffold = build_scaffold(d);
    const auto& sc = b.scaffold;
    auto& dg = b.diag;
    const GluedCurve glued(sc);

    dg.continuity = std::max(std::abs(glued.eval(-1e-13) - glued.eval(1e-13)),
                             std::abs(glued.eval(glued.junction() - 1e-13) - glued.eval(glued.junction() + 1e-13)));
    if (dg.continuity > 1e-10) throw DegenerateCurveError("glued curve is discontinuous at a junction");
    b.gamma_curve = resample_glued(glued, kGammaNodes);

    // conformal map of the disk onto the interior of Gamma, normalized at 0
    const std::size_t nn = kGammaNodes;
    dg.nodes = nn;
    std::vector<cplx> z(nn), dz(nn);
    std::vector<double> sg(nn);
    for (std::size_t j = 0; j < nn; ++j) {
        sg[j] = PeriodicSamples::theta_of(j, nn);
        z[j] = glued.eval(sg[j]);
        dz[j] = glued.deriv(sg[j]);
    }
    if (!geom::is_simple_polygon(z) || geom::signed_area(z) <= 0)
        throw DegenerateCurveError("glued curve is not a positively oriented Jordan curve");
    if (!geom::point_in_polygon(z, 0.0)) throw DegenerateCurveError("origin is not inside the glued curve");
    SzegoMap ks(z, dz);
    ks.solve(0.0);
    const auto& t = ks.boundary_angles();
    const double turn = t[nn - 1] + std::arg(ks.boundary_values()[0] / ks.boundary_values()[nn - 1]) - t[0];
    if (std::abs(turn - kTwoPi) > 1e-6) throw NoConvergenceError("boundary correspondence does not wind once");
    dg.center_error = std::abs(ks.forward(0.0));

    // invert the correspondence t(sigma) on a refined grid
    std::vector<cplx> f(nn);
    for (std::size_t j = 0; j < nn; ++j) f[j] = t[j] - sg[j];
    const std::size_t m = 32 * nn;
    const auto fd = upsample(PeriodicSamples(std::move(f)), m);
    std::vector<double> th(m + 1), sd(m + 1);
    for (std::size_t j = 0; j < m; ++j) {
        sd[j] = PeriodicSamples::theta_of(j, m);
        th[j] = fd[j].real() + sd[j];
        if (j && th[j] <= th[j - 1]) {
            ++dg.nonmonotone;
            th[j] = th[j - 1];
        }
    }
    sd[m] = kTwoPi;
    th[m] = std::max(th[0] + kTwoPi, th[m - 1]);
    const std::size_t nc = 16384;
    std::vector<cplx> w(nc);
    for (std::size_t k = 0; k < nc; ++k) {
        const double tau = wrap_into(PeriodicSamples::theta_of(k, nc), th[0]);
        auto it = std::upper_bound(th.begin(), th.end(), tau);
        const std::size_t j = std::clamp<std::size_t>(static_cast<std::size_t>(it - th.begin()), 1, m) - 1;
        const double span = th[j + 1] - th[j];
        const double s = span > 0 ? sd[j] + (tau - th[j]) / span * (sd[j + 1] - sd[j]) : sd[j];
        w[k] = glued.eval(s);
    }
    const auto c = detail::dft_coeffs(w);
    {
        double neg = 0.0, tot = 0.0;
        for (std::size_t k = 0; k < nc; ++k) {
            tot += std::norm(c[k]);
            if (detail::freq(k, nc) < 0) neg += std::norm(c[k]);
        }
        dg.leakage = std::sqrt(neg / tot);
    }

    std::optional<Candidate> cand;
    for (std::size_t order : kTaylorOrders) {
        std::string why;
        cand = try_candidate(c, order, why);
        if (cand) {
            dg.taylor_order = order;
            break;
        }
        dg.attempts.push_back(std::to_string(order) + ": " + why);
    }
    if (!cand) throw NoConvergenceError("no Taylor truncation of the conformal map yields a simple boundary map");
    b.omega = cand->omega;
    dg.tail = b.omega.tail_fraction();
    dg.x1 = cand->x1;
    dg.x2 = cand->x2;
    b.phi = BoundaryCurve(PeriodicSamples(cand->phi));

    // U = F(omega) = Re omega + i Re(omega^2) = G + conj(H)
    {
        const PowerSeries sq = mul(b.omega, b.omega, 2 * (b.omega.order()));
        const PowerSeries g = 0.5 * b.omega + cplx(0.0, 0.5) * sq;
        const PowerSeries hh = 0.5 * b.omega - cplx(0.0, 0.5) * sq;
        b.U.g = g.coeffs();
        b.U.h = hh.coeffs();
    }

    {
        const std::size_t dn = 65536;
        const auto tgt = sc.normalized.sample(dn);
        const auto gd = b.omega.on_circle(2 * dn);
        std::vector<cplx> pd(gd.size());
        for (std::size_t j = 0; j < gd.size(); ++j) pd[j] = base_map_F(gd[j]);
        dg.fidelity = geom::hausdorff(tgt, pd) / geom::diameter(tgt);
    }

    // fold curve: omega^{-1} of the real segment (x1, x2)
    const std::size_t ke = kEtaSamples;
    b.eta.assign(ke, 0.0);
    std::vector<double> xs(ke);
    for (std::size_t k = 0; k < ke; ++k) xs[k] = dg.x1 + (dg.x2 - dg.x1) * (double(k) + 0.5) / double(ke);
    {
        const std::size_t mid = ke / 2;
        cplx zm = 0.0;
        if (!continue_to(b.omega, xs[mid], zm, 32)) throw NoConvergenceError("fold curve seed did not converge");
        b.eta[mid] = zm;
        for (std::size_t k = mid + 1; k < ke; ++k) {
            cplx zk = b.eta[k - 1];
            if (!continue_to(b.omega, xs[k], zk, 4)) throw NoConvergenceError("fold curve march did not converge");
            b.eta[k] = zk;
        }
        for (std::size_t k = mid; k-- > 0;) {
            cplx zk = b.eta[k + 1];
            if (!continue_to(b.omega, xs[k], zk, 4)) throw NoConvergenceError("fold curve march did not converge");
            b.eta[k] = zk;
        }
    }
    {
        const double delta = 1e-3;
        std::size_t opposite = 0;
        std::vector<cplx> img(ke);
        for (std::size_t k = 0; k < ke; ++k) {
            const cplx zk = b.eta[k];
            dg.eta_max_det = std::max(dg.eta_max_det, std::abs(eval_jacobian(b.U, zk)));
            const cplx dw = b.omega.eval_derivative(zk);
            const cplx nrm = kI * std::conj(dw) / std::abs(dw);
            const cplx zp = zk + delta * nrm, zq = zk - delta * nrm;
            if (std::abs(zp) < 1.0 && std::abs(zq) < 1.0) {
                const double jp = eval_jacobian(b.U, zp), jq = eval_jacobian(b.U, zq);
                if ((jp > 0 && jq < 0) || (jp < 0 && jq > 0)) ++opposite;
            }
            img[k] = eval(b.U, zk);
            dg.eta_parabola = std::max(dg.eta_parabola, std::abs(img[k].imag() - img[k].real() * img[k].real()));
        }
        dg.eta_opposite_fraction = double(opposite) / double(ke);
        dg.eta_min_separation = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < ke; ++i)
            for (std::size_t j = i + 1; j < ke; ++j)
                dg.eta_min_separation = std::min(dg.eta_min_separation, std::abs(img[i] - img[j]));
        const auto tgt = sc.normalized.sample(4096);
        dg.eta_outside_target = true;
        for (const auto& q : img)
            if (geom::point_in_polygon(tgt, q) || geom::distance_to_polygon(tgt, q) == 0.0) dg.eta_outside_target = false;
    }

    // witnesses: preimages of x0 +- i y0 on the vertical chord through the fold
    {
        const double x0 = 0.5 * (dg.x1 + dg.x2);
        double up = std::numeric_limits<double>::infinity(), down = up;
        for (double y : vertical_crossings(cand->gamma_n, x0)) {
            if (y > 0) up = std::min(up, y);
            if (y < 0) down = std::min(down, -y);
        }
        const double half = std::min(up, down);
        std::size_t seed = 0;
        for (std::size_t k = 1; k < ke; ++k)
            if (std::abs(xs[k] - x0) < std::abs(xs[seed] - x0)) seed = k;
        for (double fac : {0.5, 0.75, 0.9}) {
            if (!std::isfinite(half)) break;
            const double y0 = fac * half;
            cplx z1 = b.eta[seed], z2 = b.eta[seed];
            if (!continue_to(b.omega, cplx(x0, y0), z1, 32) || !continue_to(b.omega, cplx(x0, -y0), z2, 32))
                continue;
            Witness wt{z1, z2, eval(b.U, z1), eval(b.U, z2)};
            if (std::abs(wt.u1 - wt.u2) <= 1e-8 && std::abs(z1 - z2) >= 0.05) {
                b.witnesses.push_back(wt);
                break;
            }
        }
    }

    if (b.witnesses.empty()) throw NoConvergenceError("no non-injectivity witness pair resolved");

    // discrete Laplacian of U on an interior ring grid, relative to max |U| there
    {
        const double hs = 1e-3;
        double lap = 0.0, mag = 0.0;
        for (double r : {0.25, 0.5, 0.75})
            for (int k = 0; k < 32; ++k) {
                const cplx q = std::polar(r, kTwoPi * k / 32.0);
                const cplx c0 = eval(b.U, q);
                // fourth-order five-point second differences along each axis
                cplx l = -60.0 * c0;
                for (const cplx e : {cplx(1.0), kI})
                    l += 16.0 * (eval(b.U, q + hs * e) + eval(b.U, q - hs * e)) -
                         (eval(b.U, q + 2.0 * hs * e) + eval(b.U, q - 2.0 * hs * e));
                l /= 12.0;
                lap = std::max(lap, std::abs(l) / (hs * hs));
                mag = std::max(mag, std::abs(c0));
            }
        dg.harmonic_residual = lap / std::max(mag, 1e-300);
    }
    return b;
}

const std::vector<cplx>& eta_curve(const CounterexampleBundle& b) { return b.eta; }

}  // namespace harmap
