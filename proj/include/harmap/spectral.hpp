#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace harmap {

using cplx = std::complex<double>;
using Warnings = std::vector<std::string>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kTailTolerance = 1e-8;
inline constexpr std::size_t kDefaultGrid = 1024;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
std::size_t next_pow2(std::size_t n);

// n uniform samples of a 2pi-periodic function at theta_j = 2 pi j / n.
class PeriodicSamples {
public:
    PeriodicSamples() = default;
    explicit PeriodicSamples(std::vector<cplx> values);

    static PeriodicSamples from_real(const std::vector<double>& v);

    template <class F>
    static PeriodicSamples sample(std::size_t n, F&& f) {
        std::vector<cplx> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = cplx(f(theta_of(j, n)));
        return PeriodicSamples(std::move(v));
    }

    static double theta_of(std::size_t j, std::size_t n) {
        return kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    }

    std::size_t size() const { return v_.size(); }
    double theta(std::size_t j) const { return theta_of(j, v_.size()); }
    const std::vector<cplx>& values() const { return v_; }
    cplx operator[](std::size_t j) const { return v_[j]; }

    bool is_real(double tol = 0.0) const;
    std::vector<double> real_part() const;
    std::vector<double> imag_part() const;

private:
    std::vector<cplx> v_;
};

// Coefficients c_n for a contiguous range of n, zero elsewhere.
class FourierCoeffs {
public:
    FourierCoeffs() = default;
    FourierCoeffs(long lo, std::vector<cplx> c) : lo_(lo), c_(std::move(c)) {}

    cplx operator()(long n) const;
    void set(long n, cplx v);
    long lowest() const { return lo_; }
    long highest() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    bool empty() const { return c_.empty(); }

    // Largest |n| whose coefficient exceeds rel_tol * max |c|.
    long degree(double rel_tol = 1e-13) const;

private:
    long lo_ = 0;
    std::vector<cplx> c_;
};

FourierCoeffs to_fourier(const PeriodicSamples& s);
PeriodicSamples from_fourier(const FourierCoeffs& c, std::size_t n);

PeriodicSamples diff_theta(const PeriodicSamples& s, Warnings* warn = nullptr);
PeriodicSamples hilbert(const PeriodicSamples& s);

// Energy fraction carried by |n| > n_samples/4.
double tail_mass(const PeriodicSamples& s);

// Band-limited interpolant evaluated off the grid.
cplx trig_eval(const FourierCoeffs& c, double theta);
std::vector<cplx> trig_eval(const FourierCoeffs& c, const std::vector<double>& thetas);

// Zero-padded resampling to m >= n points (Nyquist mode split evenly).
PeriodicSamples upsample(const PeriodicSamples& s, std::size_t m);

}  // namespace harmap
