#include "harmap/certify.hpp"
#include "harmap/errors.hpp"
#include "harmap/shear.hpp"

#include <doctest.h>

using namespace harmap;

TEST_SUITE("shear") {
    TEST_CASE("constant dilatation is an affine shear") {
        const auto u = shear_construct(PowerSeries({0.0, 1.0}), make_dilatation(PowerSeries({0.5})), 16);
        // G' = 1/1.5, H' = 0.5/1.5
        CHECK(std::abs(u.g[1] - 2.0 / 3.0) < 1e-15);
        CHECK(std::abs(u.h[1] - 1.0 / 3.0) < 1e-15);
        CHECK(std::abs(u.h[0]) == 0.0);
    }

    TEST_CASE("G' = f'/(1 + omega) against a geometric series") {
        const auto u = shear_construct(PowerSeries({0.0, 1.0}), make_dilatation(PowerSeries({0.0, 0.6})), 64);
        // G' = sum (-0.6 z)^k, so g_{k+1} = (-0.6)^k / (k+1)
        for (int k = 0; k < 40; ++k) CHECK(std::abs(u.g[k + 1] - std::pow(-0.6, k) / (k + 1)) < 1e-14);
        CHECK(sup_distance(dilatation(u), PowerSeries({0.0, 0.6})) < 1e-12);
    }

    TEST_CASE("coefficient identity G + H = f") {
        const PowerSeries f({0.0, 1.0, 0.2, cplx(0, 0.05)});
        const auto u = shear_construct(f, make_dilatation(PowerSeries({0.1, 0.0, 0.3})), 96);
        for (std::size_t k = 0; k < u.g.size(); ++k) CHECK(u.g[k] + u.h[k] == f[k]);
    }

    TEST_CASE("dilatation bound") {
        CHECK(make_dilatation(PowerSeries({0.0, 0.0, 0.8})).sup_bound == doctest::Approx(0.8));
        CHECK_THROWS_AS(shear_construct(PowerSeries({0.0, 1.0}), make_dilatation(PowerSeries({1.01})), 32),
                        DilatationBoundError);
    }

    TEST_CASE("univalence of the analytic part") {
        CHECK(check_univalent(PowerSeries({0.0, 1.0, 0.4})).univalent);
        const auto bad = check_univalent(PowerSeries({0.0, 1.0, 0.6}));
        CHECK_FALSE(bad.univalent);
        CHECK(bad.derivative_zeros == 1);
    }

    TEST_CASE("equivalence probe") {
        const HarmonicMap good{{0.0, 1.0, 0.1}, {0.0, 0.0, 0.2}};
        const auto r = verify_equivalences(good);
        CHECK(r.all_consistent);
        CHECK(r.u_boundary_injective);
        const HarmonicMap folded{{0.0, 1.0}, {0.0, 0.0, 0.7}};
        CHECK(verify_equivalences(folded).indeterminate);
    }
}
