#include "harmap/errors.hpp"
#include "harmap/topology.hpp"

#include <doctest.h>

using namespace harmap;

namespace {

PowerSeries from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{1.0};
    for (cplx r : roots) {
        std::vector<cplx> n(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            n[k + 1] += c[k];
            n[k] -= r * c[k];
        }
        c = n;
    }
    return PowerSeries(c);
}

}  // namespace

TEST_SUITE("topology") {
    TEST_CASE("winding of multiply traversed circles") {
        for (int k : {-2, -1, 1, 3}) {
            SampledLoop loop;
            for (int j = 0; j < 256; ++j) loop.points.push_back(std::polar(1.0, k * kTwoPi * j / 256));
            CHECK(winding_number(loop) == k);
        }
        SampledLoop off;
        for (int j = 0; j < 64; ++j) off.points.push_back(3.0 + std::polar(1.0, kTwoPi * j / 64));
        CHECK(winding_number(off) == 0);
    }

    TEST_CASE("curve winding of the tangent") {
        const auto circle = BoundaryCurve::sample(128, [](double t) { return std::polar(1.0, t); });
        CHECK(curve_winding(circle) == 1);
        const auto twice = BoundaryCurve::sample(128, [](double t) { return std::polar(1.0, 2 * t); });
        CHECK(curve_winding(twice) == 2);
    }

    TEST_CASE("zeros in the disk by argument principle") {
        CHECK(zeros_in_disk(from_roots({0.5, cplx(0, -0.3), 2.0, cplx(-1.5, 1.0)})) == 2);
        CHECK(zeros_in_disk(from_roots({0.1, 0.1, 0.1})) == 3);
        CHECK(zeros_in_disk(from_roots({3.0})) == 0);
        CHECK(zeros_in_disk(from_roots({0.5, 0.9}), 0.7) == 1);
        CHECK_THROWS_AS(zeros_in_disk(from_roots({1.0})), ZeroOnContourError);
    }

    TEST_CASE("critical counts and the winding identity") {
        const HarmonicMap small{{0.0, 1.0}, {0.0, 0.0, 0.3}};
        const HarmonicMap big{{0.0, 1.0}, {0.0, 0.0, 0.7}};
        CHECK(critical_count(small, 0.0) == 0);
        CHECK(critical_count(big, 0.0) == 1);
        const auto phi = BoundaryCurve(PeriodicSamples(boundary_values(small, 512)));
        const auto r = wn_identity_check(small, phi);
        CHECK(r.wn_f == 1);
        CHECK(r.wn_phi == 1);
        CHECK(r.m == 0);
        CHECK(r.consistent);
    }
}
