#pragma once

#include "harmap/dirichlet.hpp"
#include "harmap/series.hpp"

#include <vector>

namespace harmap {

struct SampledLoop {
    std::vector<cplx> points;
};

// Winding of the loop about the origin. For the winding number of a curve
// pass its derivative samples (tangent loop).
int winding_number(const SampledLoop& loop);

// Winding of the tangent of Phi, i.e. WN(Phi(dB)) from diff_theta.
int curve_winding(const BoundaryCurve& phi, Warnings* warn = nullptr);

// Zeros of h in |z| < r counted with multiplicity.
int zeros_in_disk(const PowerSeries& h, double r = 1.0);

// M_alpha: zeros of f_alpha' in the unit disk.
int critical_count(const HarmonicMap& u, double alpha);

struct WindingReport {
    int wn_f = 0;
    int wn_phi = 0;
    int m = 0;
    bool consistent = false;
};

WindingReport wn_identity_check(const HarmonicMap& u, const BoundaryCurve& phi);

}  // namespace harmap
