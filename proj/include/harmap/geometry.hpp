#pragma once

#include "harmap/spectral.hpp"

#include <optional>
#include <vector>

// Planar polygon utilities; points are complex numbers, polygons implicitly closed.
namespace harmap::geom {

double cross(cplx a, cplx b);
double signed_area(const std::vector<cplx>& poly);

// Hull vertex indices in counter-clockwise order, collinear points dropped.
std::vector<std::size_t> convex_hull(const std::vector<cplx>& pts);

bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2);

// No two non-adjacent edges meet and no edge is degenerate.
bool is_simple_polygon(const std::vector<cplx>& poly);

bool point_in_polygon(const std::vector<cplx>& poly, cplx q);

double point_segment_distance(cplx q, cplx a, cplx b);
double distance_to_polygon(const std::vector<cplx>& poly, cplx q);

// Smallest t > eps with origin + t*dir on the polygon boundary.
std::optional<double> ray_polygon_hit(const std::vector<cplx>& poly, cplx origin, cplx dir,
                                      double eps = 1e-12);

double diameter(const std::vector<cplx>& pts);

// Largest number of boundary crossings of any line with direction e^{i theta}.
std::size_t max_line_crossings(const std::vector<cplx>& poly, double theta);

// Nearest-edge queries against a fixed closed polygon (bounding-box tree).
class SegmentIndex {
public:
    explicit SegmentIndex(std::vector<cplx> poly);
    double distance(cplx q) const;

private:
    struct Node {
        double x0, y0, x1, y1;
        std::size_t left, right;  // children, or the segment range [left, right) at a leaf
        bool leaf;
    };
    std::size_t build(std::size_t lo, std::size_t hi);
    void query(std::size_t node, cplx q, double& best) const;

    std::vector<cplx> poly_;
    std::vector<std::size_t> seg_;
    std::vector<Node> nodes_;
};

// Two-sided maximal distance between closed polygons.
double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace harmap::geom
