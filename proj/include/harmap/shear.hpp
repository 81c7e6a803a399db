#pragma once

#include "harmap/dirichlet.hpp"
#include "harmap/series.hpp"

namespace harmap {

inline constexpr std::size_t kDefaultShearOrder = 128;
inline constexpr std::size_t kDilatationGrid = 4096;

struct DilatationSpec {
    PowerSeries omega;
    double sup_bound = 0.0;  // max |omega| on the boundary grid
};

DilatationSpec make_dilatation(PowerSeries omega);

// Build U = G + conj(H) with G + H = f and H'/G' = omega, H(0) = 0.
// G' = f'/(1+omega) and H' = omega G' are truncated at order K-1.
HarmonicMap shear_construct(const PowerSeries& f, const DilatationSpec& omega,
                            std::size_t order = kDefaultShearOrder);

// H' / G' truncated at the order of U.
PowerSeries dilatation(const HarmonicMap& u);

// max |a - b| over the boundary grid.
double sup_distance(const PowerSeries& a, const PowerSeries& b, std::size_t n = kDilatationGrid);

struct UnivalenceReport {
    int derivative_zeros = 0;
    bool boundary_simple = false;
    bool univalent = false;
};

// f' zero-free in the closed disk and f(dB) a simple loop.
UnivalenceReport check_univalent(const PowerSeries& f, std::size_t n = kDilatationGrid);

struct EquivalenceReport {
    bool u_boundary_injective = false;
    bool f_boundary_injective = false;
    bool jacobian_positive_boundary = false;
    bool all_consistent = false;
    bool indeterminate = false;  // hypothesis det DU > 0 on dB failed
};

EquivalenceReport verify_equivalences(const HarmonicMap& u);

}  // namespace harmap
