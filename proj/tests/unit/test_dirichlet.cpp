#include "harmap/dirichlet.hpp"

#include <doctest.h>

using namespace harmap;

namespace {

const std::vector<cplx> kG{0.1, 1.0, cplx(0.2, 0.1)};
const std::vector<cplx> kH{0.0, 0.1, 0.0, cplx(0.0, 0.05)};

cplx oracle(cplx z) { return horner(kG, z) + std::conj(horner(kH, z)); }

}  // namespace

TEST_SUITE("dirichlet") {
    TEST_CASE("poisson extension reproduces a polynomial harmonic map") {
        const auto phi = BoundaryCurve::sample(256, [](double t) { return oracle(std::polar(1.0, t)); });
        const auto u = solve(phi);
        for (double r : {0.0, 0.3, 0.7, 0.99})
            for (int j = 0; j < 8; ++j) {
                const cplx z = std::polar(r, 0.7 * j);
                CHECK(std::abs(eval(u, z) - oracle(z)) < 1e-13);
            }
        CHECK(std::abs(analytic_f(u).eval(0.5) - (horner(kG, 0.5) + horner(kH, 0.5))) < 1e-13);
    }

    TEST_CASE("identity map") {
        const auto u = solve(BoundaryCurve::sample(64, [](double t) { return std::polar(1.0, t); }));
        CHECK(std::abs(eval(u, cplx(0.3, -0.2)) - cplx(0.3, -0.2)) < 1e-14);
        CHECK(eval_jacobian(u, cplx(0.1, 0.5)) == doctest::Approx(1.0).epsilon(1e-13));
    }

    TEST_CASE("jacobian against central differences") {
        const HarmonicMap u{kG, kH};
        const double h = 1e-5;
        for (int j = 0; j < 6; ++j) {
            const cplx z = std::polar(0.6, 1.1 * j);
            const cplx dx = (eval(u, z + h) - eval(u, z - h)) / (2 * h);
            const cplx dy = (eval(u, z + cplx(0, h)) - eval(u, z - cplx(0, h))) / (2 * h);
            const double det = dx.real() * dy.imag() - dy.real() * dx.imag();
            CHECK(std::abs(eval_jacobian(u, z) - det) < 1e-8);
        }
    }

    TEST_CASE("jacobian field layout") {
        const HarmonicMap u{kG, kH};
        const auto f = jacobian_field(u, 4, 8);
        CHECK(f.radii.size() == 4);
        CHECK(f.radii[0] == doctest::Approx(0.2));
        CHECK(f.at(2, 3) == doctest::Approx(eval_jacobian(u, std::polar(0.6, kTwoPi * 3 / 8))).epsilon(1e-14));
        double m = 1e300;
        for (double d : f.det) m = std::min(m, d);
        CHECK(f.min == m);
    }

    TEST_CASE("boundary helpers") {
        const HarmonicMap u{kG, kH};
        const auto b = boundary_values(u, 16);
        const auto j = boundary_jacobian_of(u, 16);
        for (std::size_t k = 0; k < 16; ++k) {
            CHECK(std::abs(b[k] - oracle(std::polar(1.0, kTwoPi * k / 16))) < 1e-14);
            CHECK(j[k] == doctest::Approx(eval_jacobian(u, std::polar(1.0, kTwoPi * k / 16))).epsilon(1e-12));
        }
    }

    TEST_CASE("rotated analytic functions") {
        const HarmonicMap u{kG, kH};
        const auto f = f_alpha(u, 0.4);
        const cplx z(0.2, 0.3);
        CHECK(std::abs(f.eval(z) - (std::polar(1.0, -0.4) * horner(kG, z) + std::polar(1.0, 0.4) * horner(kH, z))) < 1e-14);
    }
}
