#include "harmap/curve.hpp"

#include "fft.hpp"

#include <algorithm>

namespace harmap {

TrigCurve TrigCurve::from_samples(const PeriodicSamples& s, double rel_tol) {
    const std::size_t n = s.size();
    const long h = static_cast<long>(n / 2);
    auto c = detail::dft_coeffs(s.values());
    std::vector<cplx> d(n + 1, cplx(0.0));  // modes -h..h
    for (std::size_t k = 0; k < n; ++k) {
        const long f = detail::freq(k, n);
        if (f == -h) {
            d[0] = 0.5 * c[k];
            d[n] = 0.5 * c[k];
        } else {
            d[static_cast<std::size_t>(f + h)] = c[k];
        }
    }
    double mx = 0.0;
    for (const auto& x : d) mx = std::max(mx, std::abs(x));
    long deg = 0;
    for (long k = -h; k <= h; ++k)
        if (std::abs(d[static_cast<std::size_t>(k + h)]) > rel_tol * mx) deg = std::max(deg, std::abs(k));
    std::vector<cplx> t(d.begin() + (h - deg), d.begin() + (h + deg + 1));
    return TrigCurve(-deg, std::move(t));
}

cplx TrigCurve::coeff(long k) const {
    if (k < lo_ || k > highest()) return 0.0;
    return c_[static_cast<std::size_t>(k - lo_)];
}

template <class W>
cplx TrigCurve::sum(double s, W weight) const {
    const cplx z = std::polar(1.0, s);
    cplx acc = 0.0;
    for (long k = highest(); k >= lo_; --k) acc = acc * z + weight(k) * c_[static_cast<std::size_t>(k - lo_)];
    return acc * std::polar(1.0, static_cast<double>(lo_) * s);
}

cplx TrigCurve::eval(double s) const {
    return sum(s, [](long) { return cplx(1.0); });
}

cplx TrigCurve::deriv(double s) const {
    return sum(s, [](long k) { return cplx(0.0, static_cast<double>(k)); });
}

cplx TrigCurve::deriv2(double s) const {
    return sum(s, [](long k) { return cplx(-static_cast<double>(k) * static_cast<double>(k)); });
}

cplx TrigCurve::increment(double s0, double d) const {
    // e^{ikd} - 1 = 2i sin(kd/2) e^{ikd/2}
    cplx acc = 0.0;
    for (long k = lo_; k <= highest(); ++k) {
        const double kd = static_cast<double>(k) * d;
        acc += c_[static_cast<std::size_t>(k - lo_)] * std::polar(1.0, static_cast<double>(k) * s0) *
               cplx(0.0, 2.0 * std::sin(0.5 * kd)) * std::polar(1.0, 0.5 * kd);
    }
    return acc;
}

TrigCurve TrigCurve::reversed() const {
    std::vector<cplx> r(c_.rbegin(), c_.rend());
    return TrigCurve(-highest(), std::move(r));
}

TrigCurve TrigCurve::real_affine(cplx a, cplx b, cplx c) const {
    // conj(sum c_k e^{iks}) carries conj(c_{-k}) on mode k
    const long m = std::max(std::abs(lo_), std::abs(highest()));
    std::vector<cplx> r(static_cast<std::size_t>(2 * m + 1), cplx(0.0));
    for (long k = -m; k <= m; ++k) r[static_cast<std::size_t>(k + m)] = a * coeff(k) + b * std::conj(coeff(-k));
    r[static_cast<std::size_t>(m)] += c;
    return TrigCurve(-m, std::move(r));
}

std::vector<cplx> TrigCurve::sample(std::size_t n) const {
    std::vector<cplx> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = eval(PeriodicSamples::theta_of(j, n));
    return v;
}

}  // namespace harmap
