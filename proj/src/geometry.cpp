#include "harmap/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace harmap::geom {

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double signed_area(const std::vector<cplx>& poly) {
    double s = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
    return 0.5 * s;
}

std::vector<std::size_t> convex_hull(const std::vector<cplx>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].real() != pts[b].real()) return pts[a].real() < pts[b].real();
        if (pts[a].imag() != pts[b].imag()) return pts[a].imag() < pts[b].imag();
        return a < b;
    });
    if (n < 3) return idx;
    std::vector<std::size_t> h(2 * n);
    std::size_t k = 0;
    auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
        return cross(pts[a] - pts[o], pts[b] - pts[o]);
    };
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], idx[i]) <= 0) --k;
        h[k++] = idx[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && turn(h[k - 2], h[k - 1], idx[i]) <= 0) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    return h;
}

namespace {

int orient(cplx a, cplx b, cplx c) {
    const double v = cross(b - a, c - a);
    return (v > 0) - (v < 0);
}

bool on_segment(cplx a, cplx b, cplx q) {
    return std::min(a.real(), b.real()) <= q.real() && q.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= q.imag() && q.imag() <= std::max(a.imag(), b.imag());
}

}  // namespace

bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2) {
    const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

bool is_simple_polygon(const std::vector<cplx>& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    double xmin = poly[0].real(), xmax = xmin, ymin = poly[0].imag(), ymax = ymin;
    for (const auto& p : poly) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    }
    const double scale = std::max(xmax - xmin, ymax - ymin);
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(poly[(i + 1) % n] - poly[i]) <= 1e-14 * std::max(scale, 1e-300)) return false;

    // Uniform grid of roughly sqrt(n) x sqrt(n) cells; each edge is registered
    // in every cell its bounding box touches.
    const std::size_t g = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(double(n))));
    const double w = std::max(xmax - xmin, 1e-300) / double(g);
    const double hgt = std::max(ymax - ymin, 1e-300) / double(g);
    auto cx = [&](double x) {
        return std::min<std::size_t>(g - 1, static_cast<std::size_t>(std::max(0.0, (x - xmin) / w)));
    };
    auto cy = [&](double y) {
        return std::min<std::size_t>(g - 1, static_cast<std::size_t>(std::max(0.0, (y - ymin) / hgt)));
    };
    std::vector<std::vector<std::size_t>> cells(g * g);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx a = poly[i], b = poly[(i + 1) % n];
        const std::size_t x0 = cx(std::min(a.real(), b.real())), x1 = cx(std::max(a.real(), b.real()));
        const std::size_t y0 = cy(std::min(a.imag(), b.imag())), y1 = cy(std::max(a.imag(), b.imag()));
        for (std::size_t x = x0; x <= x1; ++x)
            for (std::size_t y = y0; y <= y1; ++y) cells[x * g + y].push_back(i);
    }
    for (const auto& cell : cells) {
        for (std::size_t a = 0; a < cell.size(); ++a) {
            for (std::size_t b = a + 1; b < cell.size(); ++b) {
                const std::size_t i = cell[a], j = cell[b];
                const std::size_t d = (j + n - i) % n;
                const cplx p1 = poly[i], p2 = poly[(i + 1) % n];
                const cplx q1 = poly[j], q2 = poly[(j + 1) % n];
                if (d == 1 || d == n - 1) {
                    // adjacent edges: only a fold back onto the shared vertex counts
                    const cplx shared = d == 1 ? p2 : p1;
                    const cplx u = (d == 1 ? p1 : p2) - shared;
                    const cplx v = (d == 1 ? q2 : q1) - shared;
                    if (cross(u, v) == 0.0 && (u.real() * v.real() + u.imag() * v.imag()) > 0)
                        return false;
                    continue;
                }
                if (segments_intersect(p1, p2, q1, q2)) return false;
            }
        }
    }
    return true;
}

bool point_in_polygon(const std::vector<cplx>& poly, cplx q) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const cplx a = poly[i], b = poly[j];
        if ((a.imag() > q.imag()) != (b.imag() > q.imag())) {
            const double x = a.real() + (q.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
            if (q.real() < x) inside = !inside;
        }
    }
    return inside;
}

double point_segment_distance(cplx q, cplx a, cplx b) {
    const cplx ab = b - a;
    const double l2 = std::norm(ab);
    if (l2 == 0.0) return std::abs(q - a);
    double t = ((q - a) * std::conj(ab)).real() / l2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(q - (a + t * ab));
}

double distance_to_polygon(const std::vector<cplx>& poly, cplx q) {
    double d = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) d = std::min(d, point_segment_distance(q, poly[i], poly[(i + 1) % n]));
    return d;
}

std::optional<double> ray_polygon_hit(const std::vector<cplx>& poly, cplx origin, cplx dir, double eps) {
    std::optional<double> best;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx a = poly[i], b = poly[(i + 1) % n];
        const cplx e = b - a;
        const double den = cross(dir, e);
        if (den == 0.0) continue;
        const double t = cross(a - origin, e) / den;
        const double s = cross(a - origin, dir) / den;
        if (t > eps && s >= 0.0 && s <= 1.0 && (!best || t < *best)) best = t;
    }
    return best;
}

double diameter(const std::vector<cplx>& pts) {
    const auto h = convex_hull(pts);
    const std::size_t m = h.size();
    double d = 0.0;
    if (m < 3) {
        for (const auto& p : pts) d = std::max(d, std::abs(p - pts[0]));
        return d;
    }
    // rotating calipers over the counter-clockwise hull
    auto pt = [&](std::size_t k) { return pts[h[k % m]]; };
    std::size_t j = 1;
    for (std::size_t i = 0; i < m; ++i) {
        const cplx e = pt(i + 1) - pt(i);
        while (cross(e, pt(j + 1) - pt(i)) > cross(e, pt(j) - pt(i))) ++j;
        d = std::max({d, std::abs(pt(j) - pt(i)), std::abs(pt(j) - pt(i + 1))});
    }
    return d;
}

std::size_t max_line_crossings(const std::vector<cplx>& poly, double theta) {
    // Lines x sin(theta) - y cos(theta) = c; probe c midway between vertex levels.
    const double s = std::sin(theta), c = std::cos(theta);
    const std::size_t n = poly.size();
    std::vector<double> lv(n);
    for (std::size_t i = 0; i < n; ++i) lv[i] = poly[i].real() * s - poly[i].imag() * c;
    std::vector<double> sorted = lv;
    std::sort(sorted.begin(), sorted.end());
    std::size_t best = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sorted[k + 1] <= sorted[k]) continue;
        const double level = 0.5 * (sorted[k] + sorted[k + 1]);
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double a = lv[i] - level, b = lv[(i + 1) % n] - level;
            if ((a < 0) != (b < 0)) ++cnt;
        }
        best = std::max(best, cnt);
    }
    return best;
}

SegmentIndex::SegmentIndex(std::vector<cplx> poly) : poly_(std::move(poly)) {
    seg_.resize(poly_.size());
    std::iota(seg_.begin(), seg_.end(), 0);
    nodes_.reserve(poly_.size() / 2 + 1);
    if (!poly_.empty()) build(0, seg_.size());
}

std::size_t SegmentIndex::build(std::size_t lo, std::size_t hi) {
    const std::size_t n = poly_.size();
    Node nd{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), lo, hi, true};
    for (std::size_t k = lo; k < hi; ++k) {
        for (const cplx p : {poly_[seg_[k]], poly_[(seg_[k] + 1) % n]}) {
            nd.x0 = std::min(nd.x0, p.real());
            nd.y0 = std::min(nd.y0, p.imag());
            nd.x1 = std::max(nd.x1, p.real());
            nd.y1 = std::max(nd.y1, p.imag());
        }
    }
    const std::size_t id = nodes_.size();
    nodes_.push_back(nd);
    if (hi - lo <= 8) return id;
    const bool by_x = nd.x1 - nd.x0 >= nd.y1 - nd.y0;
    auto key = [&](std::size_t s) {
        const cplx m = poly_[s] + poly_[(s + 1) % n];
        return by_x ? m.real() : m.imag();
    };
    const std::size_t mid = lo + (hi - lo) / 2;
    std::nth_element(seg_.begin() + long(lo), seg_.begin() + long(mid), seg_.begin() + long(hi),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    const std::size_t l = build(lo, mid);
    const std::size_t r = build(mid, hi);
    nodes_[id].left = l;
    nodes_[id].right = r;
    nodes_[id].leaf = false;
    return id;
}

namespace {

double box_distance(double x0, double y0, double x1, double y1, cplx q) {
    const double dx = std::max({x0 - q.real(), 0.0, q.real() - x1});
    const double dy = std::max({y0 - q.imag(), 0.0, q.imag() - y1});
    return std::hypot(dx, dy);
}

}  // namespace

void SegmentIndex::query(std::size_t node, cplx q, double& best) const {
    const Node& nd = nodes_[node];
    if (nd.leaf) {
        const std::size_t n = poly_.size();
        for (std::size_t k = nd.left; k < nd.right; ++k)
            best = std::min(best, point_segment_distance(q, poly_[seg_[k]], poly_[(seg_[k] + 1) % n]));
        return;
    }
    const Node& a = nodes_[nd.left];
    const Node& b = nodes_[nd.right];
    double da = box_distance(a.x0, a.y0, a.x1, a.y1, q), db = box_distance(b.x0, b.y0, b.x1, b.y1, q);
    std::size_t first = nd.left, second = nd.right;
    if (db < da) {
        std::swap(first, second);
        std::swap(da, db);
    }
    if (da < best) query(first, q, best);
    if (db < best) query(second, q, best);
}

double SegmentIndex::distance(cplx q) const {
    double best = std::numeric_limits<double>::infinity();
    if (!nodes_.empty()) query(0, q, best);
    return best;
}

double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    const SegmentIndex ia(a), ib(b);
    double d = 0.0;
    for (const auto& p : a) d = std::max(d, ib.distance(p));
    for (const auto& p : b) d = std::max(d, ia.distance(p));
    return d;
}

}  // namespace harmap::geom
