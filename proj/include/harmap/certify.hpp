#pragma once

#include "harmap/dirichlet.hpp"
#include "harmap/topology.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace harmap {

struct RegularityReport {
    bool is_simple = false;
    bool is_c1_diffeo = false;
    int orientation = 0;
    double min_speed = 0.0;
    double max_speed = 0.0;
    double tail = 0.0;

    bool passes() const { return is_simple && is_c1_diffeo; }
};

struct ConvexPartition {
    std::vector<std::size_t> gamma_c_indices;
    std::vector<std::size_t> gamma_nc_indices;
    std::vector<std::size_t> hull;  // hull vertex indices, counter-clockwise
    std::vector<bool> in_gamma_c;   // per sample

    // Maximal cyclic runs of gamma_nc as inclusive [first, last] index pairs.
    std::vector<std::pair<std::size_t, std::size_t>> nc_arcs() const;
};

enum class Verdict { Invertible, NotInvertible, Indeterminate };
const char* verdict_name(Verdict v);

struct CertificateReport {
    std::vector<double> jacobian_boundary;
    double min_jacobian = 0.0;  // over all samples
    double argmin_theta = 0.0;
    std::optional<double> min_checked;  // over the checked index set
    std::size_t checked_count = 0;
    double margin = 0.0;
    Verdict verdict = Verdict::Indeterminate;
    std::string reason;
    std::optional<WindingReport> wn_report;
    RegularityReport regularity;
    ConvexPartition partition;
    std::size_t gamma_c_violations = 0;  // samples in gamma_c with J <= 0
    std::vector<std::size_t> violation_indices;  // checked samples with J < -margin
    Warnings warnings;
};

// J = psi' H(phi') - phi' H(psi'), equal to det DU on the unit circle.
std::vector<double> boundary_jacobian(const BoundaryCurve& phi, Warnings* warn = nullptr);

ConvexPartition convex_partition(const BoundaryCurve& phi);
RegularityReport check_regularity(const BoundaryCurve& phi);

CertificateReport certify_full(const BoundaryCurve& phi);
CertificateReport certify_nonconvex(const BoundaryCurve& phi);

bool is_convex_in_direction(const std::vector<cplx>& points, double theta);

}  // namespace harmap
