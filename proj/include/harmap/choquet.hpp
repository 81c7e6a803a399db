#pragma once

#include "harmap/curve.hpp"
#include "harmap/dirichlet.hpp"
#include "harmap/series.hpp"
#include "harmap/spectral.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace harmap {

// F(x, y) = (x, x^2 - y^2)
cplx base_map_F(cplx z);
// (u, sign * sqrt(u^2 - v)); DomainError when v > u^2 + 1e-12.
cplx F_inverse_branch(cplx w, int sign);

// w -> M w + offset, M acting on (Re w, Im w).
struct AffineMap {
    std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};
    cplx offset = 0.0;

    cplx apply(cplx w) const { return linear(w) + offset; }
    cplx linear(cplx w) const;
    AffineMap inverse() const;
    // coefficients of the same map written as a z + b conj(z) + offset
    cplx holomorphic_part() const;
    cplx antiholomorphic_part() const;
};

struct ChoquetScaffold {
    std::size_t ia = 0, ib = 0;  // bridge sample indices
    cplx A, B, C, E;
    double alpha = 0.0, beta = 0.0;  // bounding ray angles of the cone at E
    double aperture = 0.0;
    cplx A1, B1;  // contact points A', B'
    double sA = 0.0, sB = 0.0;
    AffineMap affine;
    double p = 1.0;
    bool reversed = false;  // input was clockwise and was traversed backwards
    TrigCurve target;       // oriented target (original coordinates)
    TrigCurve normalized;   // T applied to target

    // invariant diagnostics, all satisfied when built
    double segment_clearance = 0.0;  // min distance from the open bridge to the target
    double cone_excess = 0.0;        // max (v + p^2 - 2p|u|) over normalized samples
    double parabola_excess = 0.0;    // max (v - u^2) over normalized samples
};

ChoquetScaffold build_scaffold(const BoundaryCurve& d);

// Gamma: F-preimage of the normalized target, the pocket arc on y > 0 and the
// rest on y < 0, parametrized by sigma = s - sA (junctions at 0 and junction()).
class GluedCurve {
public:
    explicit GluedCurve(const ChoquetScaffold& s);
    cplx eval(double sigma) const;
    cplx deriv(double sigma) const;
    double junction() const { return l1_; }

private:
    // (u, u^2 - v) of the normalized target at sigma, anchored at the nearer junction
    double uq(double sigma, double& u) const;
    bool upper(double sigma) const;

    TrigCurve n_;
    double sA_, sB_, p_, l1_;
};

struct Witness {
    cplx z1, z2;
    cplx u1, u2;
};

struct CounterexampleDiagnostics {
    std::size_t nodes = 0;          // boundary nodes of the integral equation
    std::size_t taylor_order = 0;   // coefficients kept in omega
    std::size_t nonmonotone = 0;    // upsampled correspondence samples fixed by the envelope
    double leakage = 0.0;           // negative-frequency l2 ratio of Gamma(s(t))
    double tail = 0.0;              // energy fraction of the last 8 coefficients of omega
    double center_error = 0.0;      // |R(0)| from the interpolant
    double x1 = 0.0, x2 = 0.0;      // real-axis crossings of omega(boundary)
    double fidelity = 0.0;          // Hausdorff(Phi, T.D) / diameter
    double continuity = 0.0;        // jump of Gamma at the junctions
    double eta_max_det = 0.0;
    double eta_opposite_fraction = 0.0;
    double eta_parabola = 0.0;      // max |v - u^2| of U on eta
    double eta_min_separation = 0.0;
    bool eta_outside_target = false;
    double harmonic_residual = 0.0;
    std::vector<std::string> attempts;  // rejected candidate orders
};

struct CounterexampleBundle {
    ChoquetScaffold scaffold;
    BoundaryCurve gamma_curve;
    PowerSeries omega;  // conformal map of the disk onto the interior of Gamma
    BoundaryCurve phi;
    HarmonicMap U;
    std::vector<cplx> eta;
    std::vector<Witness> witnesses;
    CounterexampleDiagnostics diag;
};

inline constexpr std::size_t kGammaNodes = 1024;
inline constexpr std::size_t kPhiSamples = 4096;
inline constexpr std::size_t kEtaSamples = 512;

CounterexampleBundle build_counterexample(const BoundaryCurve& d);

const std::vector<cplx>& eta_curve(const CounterexampleBundle& b);

}  // namespace harmap
