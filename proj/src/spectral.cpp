#include "harmap/spectral.hpp"

#include "fft.hpp"
#include "harmap/errors.hpp"

#include <algorithm>

namespace harmap {

using detail::freq;

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

PeriodicSamples::PeriodicSamples(std::vector<cplx> values) : v_(std::move(values)) {
    if (v_.size() < 8 || !is_pow2(v_.size()))
        throw InputError("sample count must be a power of two >= 8, got " +
                         std::to_string(v_.size()));
    for (const auto& x : v_)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw InputError("non-finite sample value");
}

PeriodicSamples PeriodicSamples::from_real(const std::vector<double>& v) {
    return PeriodicSamples(std::vector<cplx>(v.begin(), v.end()));
}

bool PeriodicSamples::is_real(double tol) const {
    return std::all_of(v_.begin(), v_.end(),
                       [tol](cplx x) { return std::abs(x.imag()) <= tol; });
}

std::vector<double> PeriodicSamples::real_part() const {
    std::vector<double> r(v_.size());
    for (std::size_t j = 0; j < v_.size(); ++j) r[j] = v_[j].real();
    return r;
}

std::vector<double> PeriodicSamples::imag_part() const {
    std::vector<double> r(v_.size());
    for (std::size_t j = 0; j < v_.size(); ++j) r[j] = v_[j].imag();
    return r;
}

cplx FourierCoeffs::operator()(long n) const {
    if (n < lo_ || n > highest()) return 0.0;
    return c_[static_cast<std::size_t>(n - lo_)];
}

void FourierCoeffs::set(long n, cplx v) {
    if (c_.empty()) {
        lo_ = n;
        c_.assign(1, v);
        return;
    }
    if (n < lo_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - n), cplx(0.0));
        lo_ = n;
    } else if (n > highest()) {
        c_.resize(static_cast<std::size_t>(n - lo_ + 1), cplx(0.0));
    }
    c_[static_cast<std::size_t>(n - lo_)] = v;
}

long FourierCoeffs::degree(double rel_tol) const {
    double mx = 0.0;
    for (const auto& x : c_) mx = std::max(mx, std::abs(x));
    if (mx == 0.0) return 0;
    long d = 0;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (std::abs(c_[k]) > rel_tol * mx) d = std::max(d, std::abs(lo_ + static_cast<long>(k)));
    return d;
}

FourierCoeffs to_fourier(const PeriodicSamples& s) {
    const std::size_t n = s.size();
    auto c = detail::dft_coeffs(s.values());
    // reorder into n = -N/2 .. N/2-1
    std::vector<cplx> centered(n);
    for (std::size_t k = 0; k < n; ++k)
        centered[static_cast<std::size_t>(freq(k, n) + static_cast<long>(n / 2))] = c[k];
    return FourierCoeffs(-static_cast<long>(n / 2), std::move(centered));
}

PeriodicSamples from_fourier(const FourierCoeffs& c, std::size_t n) {
    const long deg = c.degree();
    if (static_cast<long>(n) < 2 * deg + 2)
        throw AliasingError("grid of " + std::to_string(n) + " too small for degree " +
                            std::to_string(deg));
    std::vector<cplx> buf(n, cplx(0.0));
    const long nn = static_cast<long>(n);
    for (long k = c.lowest(); k <= c.highest(); ++k) {
        long idx = ((k % nn) + nn) % nn;
        buf[static_cast<std::size_t>(idx)] += c(k);
    }
    return PeriodicSamples(detail::dft_synth(buf));
}

namespace {

template <class M>
PeriodicSamples apply_multiplier(const PeriodicSamples& s, M mult) {
    const std::size_t n = s.size();
    auto c = detail::dft_coeffs(s.values());
    for (std::size_t k = 0; k < n; ++k) {
        if (k == n / 2) {
            c[k] = 0.0;  // Nyquist has no consistent sign
            continue;
        }
        c[k] *= mult(freq(k, n));
    }
    return PeriodicSamples(detail::dft_synth(c));
}

}  // namespace

double tail_mass(const PeriodicSamples& s) {
    const std::size_t n = s.size();
    auto c = detail::dft_coeffs(s.values());
    double tot = 0.0, tail = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double e = std::norm(c[k]);
        tot += e;
        if (std::abs(freq(k, n)) > static_cast<long>(n / 4)) tail += e;
    }
    return tot > 0.0 ? tail / tot : 0.0;
}

PeriodicSamples diff_theta(const PeriodicSamples& s, Warnings* warn) {
    if (warn) {
        double t = tail_mass(s);
        if (t > kTailTolerance)
            warn->push_back("TailWarning: spectral tail mass " + std::to_string(t) +
                            " above tolerance");
    }
    return apply_multiplier(s, [](long k) { return cplx(0.0, static_cast<double>(k)); });
}

PeriodicSamples hilbert(const PeriodicSamples& s) {
    return apply_multiplier(s, [](long k) {
        if (k == 0) return cplx(0.0);
        return cplx(0.0, k > 0 ? -1.0 : 1.0);
    });
}

cplx trig_eval(const FourierCoeffs& c, double theta) {
    if (c.empty()) return 0.0;
    const cplx z = std::polar(1.0, theta);
    cplx acc = 0.0;
    for (long k = c.highest(); k >= c.lowest(); --k) acc = acc * z + c(k);
    return acc * std::polar(1.0, static_cast<double>(c.lowest()) * theta);
}

std::vector<cplx> trig_eval(const FourierCoeffs& c, const std::vector<double>& thetas) {
    std::vector<cplx> out(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) out[i] = trig_eval(c, thetas[i]);
    return out;
}

PeriodicSamples upsample(const PeriodicSamples& s, std::size_t m) {
    const std::size_t n = s.size();
    if (m < n || !is_pow2(m)) throw InputError("upsample target must be a power of two >= n");
    if (m == n) return s;
    auto c = detail::dft_coeffs(s.values());
    std::vector<cplx> big(m, cplx(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        long f = freq(k, n);
        if (k == n / 2) {
            big[n / 2] += 0.5 * c[k];
            big[m - n / 2] += 0.5 * c[k];
            continue;
        }
        big[static_cast<std::size_t>(f >= 0 ? f : static_cast<long>(m) + f)] = c[k];
    }
    return PeriodicSamples(detail::dft_synth(big));
}

}  // namespace harmap
