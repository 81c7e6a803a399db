#pragma once

#include "harmap/certify.hpp"
#include "harmap/dirichlet.hpp"
#include "harmap/geometry.hpp"
#include "harmap/spectral.hpp"

#include <random>
#include <string>
#include <vector>

namespace harmap::testing {

inline std::string fixture(const std::string& name) { return std::string(HARMAP_FIXTURES) + "/" + name; }

// e^{i theta} plus a few small random modes: a near-circle C1 diffeomorphism of degree <= deg.
inline BoundaryCurve random_bandlimited(std::mt19937_64& rng, int deg, std::size_t n = 1024) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::pair<int, cplx>> modes;
    for (int k = -deg; k <= deg; ++k) {
        if (k == 1) continue;
        const double amp = 0.08 / (1.0 + std::abs(k));
        modes.push_back({k, amp * cplx(u(rng), u(rng))});
    }
    return BoundaryCurve::sample(n, [&](double t) {
        cplx z = std::polar(1.0, t);
        for (const auto& [k, c] : modes) z += c * std::polar(1.0, k * t);
        return z;
    });
}

// Convex curve from a support function h with h + h'' > 0, traversed through a
// random circle diffeomorphism t -> t + eps sin(m t + phase).
inline BoundaryCurve random_convex(std::mt19937_64& rng, std::size_t n = 1024) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int deg = 2 + static_cast<int>(rng() % 5);
    std::vector<double> a(deg + 1), b(deg + 1);
    double budget = 0.0;
    for (int k = 2; k <= deg; ++k) {
        a[k] = u(rng) / (k * k * k);
        b[k] = u(rng) / (k * k * k);
        budget += (k * k - 1.0) * (std::abs(a[k]) + std::abs(b[k]));
    }
    const double r = 1.0 + 1.2 * budget + 0.2 * std::abs(u(rng));
    const double sx = 1.0 + 0.5 * std::abs(u(rng));
    const int m = 1 + static_cast<int>(rng() % 3);
    const double eps = 0.6 * std::abs(u(rng)) / m, ph = kTwoPi * std::abs(u(rng));
    const cplx shift(u(rng), u(rng));
    return BoundaryCurve::sample(n, [&](double t) {
        const double s = t + eps * std::sin(m * t + ph);
        double h = r, dh = 0.0;
        for (int k = 2; k <= deg; ++k) {
            h += a[k] * std::cos(k * s) + b[k] * std::sin(k * s);
            dh += k * (-a[k] * std::sin(k * s) + b[k] * std::cos(k * s));
        }
        const cplx z = cplx(h, dh) * std::polar(1.0, s);
        return shift + cplx(sx * z.real(), z.imag());
    });
}

// Smallest image distance between domain points at least sep apart (coarse all-pairs).
inline double min_collision_gap(const HarmonicMap& u, int rings, int spokes, double sep) {
    std::vector<cplx> z{0.0}, w;
    for (int i = 1; i <= rings; ++i)
        for (int j = 0; j < spokes; ++j) z.push_back(std::polar(double(i) / (rings + 1) * 1.0, kTwoPi * j / spokes));
    for (const auto& p : z) w.push_back(eval(u, p));
    double gap = 1e300;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            if (std::abs(z[i] - z[j]) >= sep) gap = std::min(gap, std::abs(w[i] - w[j]));
    return gap;
}

}  // namespace harmap::testing
