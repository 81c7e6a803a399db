#include "harmap/certify.hpp"

#include "harmap/errors.hpp"
#include "harmap/geometry.hpp"

#include <algorithm>
#include <limits>

namespace harmap {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Invertible: return "invertible";
        case Verdict::NotInvertible: return "not_invertible";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

std::vector<std::pair<std::size_t, std::size_t>> ConvexPartition::nc_arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    const std::size_t n = in_gamma_c.size();
    if (n == 0 || gamma_nc_indices.empty()) return arcs;
    if (gamma_c_indices.empty()) return {{0, n - 1}};
    // start scanning just after some gamma_c sample so no run wraps unseen
    std::size_t start = 0;
    while (!in_gamma_c[start]) ++start;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t i = (start + k) % n;
        if (in_gamma_c[i]) continue;
        if (k > 1 && !in_gamma_c[(i + n - 1) % n]) {
            arcs.back().second = i;
        } else {
            arcs.emplace_back(i, i);
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

std::vector<double> boundary_jacobian(const BoundaryCurve& phi, Warnings* warn) {
    // H and d/dtheta act componentwise; on complex samples a = phi' + i psi',
    // b = H(phi') + i H(psi') and J = -Im(conj(a) b).
    const auto a = diff_theta(phi.samples(), warn);
    const auto b = hilbert(a);
    std::vector<double> j(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) j[k] = -(std::conj(a[k]) * b[k]).imag();
    return j;
}

RegularityReport check_regularity(const BoundaryCurve& phi) {
    RegularityReport r;
    const auto& pts = phi.points();
    r.is_simple = geom::is_simple_polygon(pts);
    const double area = geom::signed_area(pts);
    r.orientation = (area > 0) - (area < 0);
    const auto d = diff_theta(phi.samples());
    r.min_speed = std::numeric_limits<double>::infinity();
    r.max_speed = 0.0;
    for (const auto& v : d.values()) {
        r.min_speed = std::min(r.min_speed, std::abs(v));
        r.max_speed = std::max(r.max_speed, std::abs(v));
    }
    r.tail = tail_mass(phi.samples());
    r.is_c1_diffeo = r.max_speed > 0.0 && r.min_speed > 1e-8 * r.max_speed;
    return r;
}

ConvexPartition convex_partition(const BoundaryCurve& phi) {
    const auto& pts = phi.points();
    const double diam = geom::diameter(pts);
    if (diam < 1e-12) throw DegenerateCurveError("curve image has (near) zero diameter");
    ConvexPartition p;
    p.hull = geom::convex_hull(pts);
    if (p.hull.size() < 3) throw DegenerateCurveError("curve image is collinear");
    const double tol = 1e-9 * diam;
    const std::size_t n = pts.size();
    p.in_gamma_c.assign(n, false);
    for (auto i : p.hull) p.in_gamma_c[i] = true;
    const std::size_t h = p.hull.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (p.in_gamma_c[i]) continue;
        for (std::size_t k = 0; k < h; ++k) {
            if (geom::point_segment_distance(pts[i], pts[p.hull[k]], pts[p.hull[(k + 1) % h]]) <= tol) {
                p.in_gamma_c[i] = true;
                break;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) (p.in_gamma_c[i] ? p.gamma_c_indices : p.gamma_nc_indices).push_back(i);
    return p;
}

namespace {

CertificateReport certify_impl(const BoundaryCurve& phi, bool nonconvex_only) {
    CertificateReport rep;
    rep.regularity = check_regularity(phi);
    if (rep.regularity.tail > kTailTolerance)
        rep.warnings.push_back("TailWarning: spectral tail mass " + std::to_string(rep.regularity.tail) +
                               " above tolerance");
    rep.jacobian_boundary = boundary_jacobian(phi);
    const auto& jb = rep.jacobian_boundary;
    const std::size_t n = jb.size();

    double jmax = 0.0;
    std::size_t jmin_idx = 0;
    for (std::size_t k = 0; k < n; ++k) {
        jmax = std::max(jmax, std::abs(jb[k]));
        if (jb[k] < jb[jmin_idx]) jmin_idx = k;
    }
    rep.min_jacobian = jb[jmin_idx];
    rep.argmin_theta = PeriodicSamples::theta_of(jmin_idx, n);
    rep.margin = 1e-9 * jmax;

    try {
        rep.partition = convex_partition(phi);
    } catch (const DegenerateCurveError& e) {
        rep.verdict = Verdict::NotInvertible;
        rep.reason = e.what();
        return rep;
    }
    for (auto i : rep.partition.gamma_c_indices)
        if (jb[i] <= 0.0) ++rep.gamma_c_violations;

    std::vector<std::size_t> checked;
    if (nonconvex_only) {
        checked = rep.partition.gamma_nc_indices;
    } else {
        checked.resize(n);
        for (std::size_t k = 0; k < n; ++k) checked[k] = k;
    }
    rep.checked_count = checked.size();
    for (auto i : checked) {
        if (!rep.min_checked || jb[i] < *rep.min_checked) rep.min_checked = jb[i];
        if (jb[i] < -rep.margin) rep.violation_indices.push_back(i);
    }

    if (!rep.regularity.is_simple) {
        rep.verdict = Verdict::NotInvertible;
        rep.reason = "boundary curve is not simple";
    } else if (!rep.regularity.is_c1_diffeo) {
        rep.verdict = Verdict::NotInvertible;
        rep.reason = "boundary parametrization is not a C1 diffeomorphism";
    } else if (rep.regularity.orientation != 1) {
        rep.verdict = Verdict::NotInvertible;
        rep.reason = "boundary parametrization is not orientation preserving";
    } else if (!rep.min_checked || *rep.min_checked > rep.margin) {
        rep.verdict = Verdict::Invertible;
        rep.reason = checked.empty() ? "non-convex part is empty" : "boundary Jacobian positive";
    } else if (*rep.min_checked < -rep.margin) {
        rep.verdict = Verdict::NotInvertible;
        rep.reason = "boundary Jacobian negative";
    } else {
        rep.verdict = Verdict::Indeterminate;
        rep.reason = "boundary Jacobian minimum within resolution margin";
    }

    if (rep.min_jacobian > 0.0) {
        try {
            rep.wn_report = wn_identity_check(solve(phi), phi);
        } catch (const Error& e) {
            rep.warnings.push_back(std::string("winding check skipped: ") + e.what());
        }
    }
    return rep;
}

}  // namespace

CertificateReport certify_full(const BoundaryCurve& phi) { return certify_impl(phi, false); }
CertificateReport certify_nonconvex(const BoundaryCurve& phi) { return certify_impl(phi, true); }

bool is_convex_in_direction(const std::vector<cplx>& points, double theta) {
    if (points.size() < 3) throw DegenerateCurveError("need at least 3 points");
    if (geom::signed_area(points) == 0.0) throw DegenerateCurveError("polygon has zero area");
    return geom::max_line_crossings(points, theta) <= 2;
}

}  // namespace harmap
