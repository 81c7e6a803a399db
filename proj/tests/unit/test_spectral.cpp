#include "harmap/spectral.hpp"

#include <doctest.h>

#include <random>

using namespace harmap;

namespace {

// Conjugate function on an even grid by the discrete principal-value cot kernel:
// (Hf)_j = (2/N) sum_{k - j odd} f_k cot((t_j - t_k)/2). Exact on trig polynomials below Nyquist.
std::vector<double> cot_kernel_hilbert(const std::vector<double>& f) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if ((j + n - k) % 2 == 1)
                out[j] += 2.0 / n * f[k] / std::tan(0.5 * kTwoPi * (double(j) - double(k)) / n);
    return out;
}

PeriodicSamples random_trig(std::mt19937_64& rng, std::size_t n, int deg) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<std::pair<int, cplx>> m;
    for (int k = -deg; k <= deg; ++k) m.push_back({k, cplx(u(rng), u(rng))});
    return PeriodicSamples::sample(n, [&](double t) {
        cplx z = 0;
        for (auto [k, c] : m) z += c * std::polar(1.0, k * t);
        return z;
    });
}

}  // namespace

TEST_SUITE("spectral") {
    TEST_CASE("fourier round trip and coefficient convention") {
        const auto s = PeriodicSamples::sample(64, [](double t) { return std::polar(1.0, 3 * t) + 0.5 * std::polar(1.0, -2 * t); });
        const auto c = to_fourier(s);
        CHECK(std::abs(c(3) - 1.0) < 1e-14);
        CHECK(std::abs(c(-2) - 0.5) < 1e-14);
        CHECK(std::abs(c(1)) < 1e-14);
        const auto back = from_fourier(c, 64);
        for (std::size_t j = 0; j < 64; ++j) CHECK(std::abs(back[j] - s[j]) < 1e-14);
    }

    TEST_CASE("hilbert agrees with the cot kernel oracle") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(-1, 1);
        const std::size_t n = 256;
        std::vector<double> a(60), b(60);
        for (int k = 0; k < 60; ++k) a[k] = u(rng), b[k] = u(rng);
        const auto s = PeriodicSamples::sample(n, [&](double t) {
            double v = 0;
            for (int k = 1; k < 60; ++k) v += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
            return v;
        });
        const auto h = hilbert(s);
        const auto oracle = cot_kernel_hilbert(s.real_part());
        double err = 0;
        for (std::size_t j = 0; j < n; ++j) err = std::max(err, std::abs(h[j].real() - oracle[j]));
        CHECK(err < 1e-11);
    }

    TEST_CASE("hilbert kills constants and the nyquist mode") {
        const auto s = PeriodicSamples::sample(32, [](double t) { return 2.0 + std::cos(16 * t); });
        const auto h = hilbert(s);
        for (std::size_t j = 0; j < 32; ++j) CHECK(std::abs(h[j]) < 1e-14);
    }

    TEST_CASE("spectral derivative") {
        const auto s = PeriodicSamples::sample(128, [](double t) { return std::exp(std::sin(t)); });
        const auto d = diff_theta(s);
        for (std::size_t j = 0; j < 128; ++j) {
            const double t = s.theta(j);
            CHECK(std::abs(d[j] - std::cos(t) * std::exp(std::sin(t))) < 1e-12);
        }
    }

    TEST_CASE("tail mass and upsampling") {
        std::mt19937_64 rng(9);
        const auto s = random_trig(rng, 64, 6);
        CHECK(tail_mass(s) < 1e-28);
        const auto up = upsample(s, 256);
        const auto c = to_fourier(s);
        for (std::size_t j = 0; j < 256; j += 7) CHECK(std::abs(up[j] - trig_eval(c, up.theta(j))) < 1e-13);
        const auto rough = PeriodicSamples::sample(64, [](double t) { return std::abs(std::sin(t)); });
        CHECK(tail_mass(rough) > 1e-6);
    }

    TEST_CASE("pow2 helpers") {
        CHECK(is_pow2(1024));
        CHECK_FALSE(is_pow2(1000));
        CHECK(next_pow2(1000) == 1024);
    }
}
