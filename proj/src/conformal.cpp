#include "harmap/conformal.hpp"

#include "fft.hpp"
#include "harmap/curve.hpp"
#include "harmap/errors.hpp"

#include <algorithm>
#include <numbers>

namespace harmap {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_into(double x, double lo) {
    double y = std::fmod(x - lo, kTwoPi);
    if (y < 0) y += kTwoPi;
    return lo + y;
}

}  // namespace

StarlikeBoundary::StarlikeBoundary(cplx c, PeriodicSamples r) : center(c), rho(std::move(r)) {
    for (const auto& x : rho.values())
        if (!(x.real() > 0.0) || x.imag() != 0.0) throw InputError("polar radius must be real and positive");
}

StarlikeBoundary to_polar(const BoundaryCurve& curve, cplx center, std::size_t n) {
    if (n == 0) n = curve.size();
    const auto& z = curve.points();
    const std::size_t m = z.size();
    std::vector<double> ang(m + 1);
    ang[0] = std::arg(z[0] - center);
    for (std::size_t j = 1; j <= m; ++j) {
        const cplx p = z[j % m] - center;
        if (std::abs(p) == 0.0) throw NonstarlikeError("center lies on the curve");
        ang[j] = ang[j - 1] + std::arg(p / (z[j - 1] - center));
    }
    const double total = ang[m] - ang[0];
    const double dir = total > 0 ? 1.0 : -1.0;
    if (std::abs(std::abs(total) - kTwoPi) > 1e-6) throw NonstarlikeError("curve does not wind once about the center");
    for (std::size_t j = 0; j < m; ++j)
        if (dir * (ang[j + 1] - ang[j]) <= 0.0) throw NonstarlikeError("polar angle is not monotone about the center");

    const auto tc = TrigCurve::from_samples(curve.samples());
    auto angle_at = [&](double s, double ref) {
        const double a = std::arg(tc.eval(s) - center);
        return ref + std::remainder(a - ref, kTwoPi);
    };
    std::vector<cplx> rho(n);
    for (std::size_t k = 0; k < n; ++k) {
        // locate theta_k among the unwrapped sample angles, traversed increasingly
        const double th = PeriodicSamples::theta_of(k, n);
        std::size_t j;
        double target;
        if (dir > 0) {
            target = wrap_into(th, ang[0]);
            j = static_cast<std::size_t>(std::upper_bound(ang.begin(), ang.end(), target) - ang.begin());
            j = std::clamp<std::size_t>(j, 1, m) - 1;
        } else {
            target = wrap_into(th, ang[m]);
            j = static_cast<std::size_t>(std::upper_bound(ang.rbegin(), ang.rend(), target) - ang.rbegin());
            j = m - std::clamp<std::size_t>(j, 1, m);
        }
        // dir * angle increases with s across the bracket
        double lo = PeriodicSamples::theta_of(j, m), hi = lo + kTwoPi / double(m);
        for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (dir * (angle_at(mid, target) - target) < 0)
                lo = mid;
            else
                hi = mid;
        }
        rho[k] = std::abs(tc.eval(0.5 * (lo + hi)) - center);
    }
    return StarlikeBoundary(center, PeriodicSamples(std::move(rho)));
}

double ConformalMap::rho_at(double theta) const { return std::exp(trig_eval(log_rho, theta).real()); }

ConformalMap theodorsen(const StarlikeBoundary& b, double tol, int max_iter) {
    const std::size_t n = b.rho.size();
    std::vector<cplx> lr(n);
    for (std::size_t j = 0; j < n; ++j) lr[j] = std::log(b.rho[j].real());
    ConformalMap m;
    m.center = b.center;
    m.log_rho = to_fourier(PeriodicSamples(lr));
    {
        const auto d = diff_theta(PeriodicSamples(lr));
        for (const auto& x : d.values()) m.epsilon = std::max(m.epsilon, std::abs(x.real()));
    }

    std::vector<double> t(n), sigma(n), l(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = sigma[j] = PeriodicSamples::theta_of(j, n);
    double lambda = 0.5, prev = std::numeric_limits<double>::infinity();
    bool converged = false;
    int it = 0;
    for (; it < max_iter; ++it) {
        std::vector<cplx> lv(n);
        for (std::size_t j = 0; j < n; ++j) lv[j] = trig_eval(m.log_rho, sigma[j]).real();
        const auto hl = hilbert(PeriodicSamples(std::move(lv)));
        double res = 0.0;
        std::vector<double> target(n);
        for (std::size_t j = 0; j < n; ++j) {
            target[j] = t[j] + hl[j].real();
            res = std::max(res, std::abs(target[j] - sigma[j]));
        }
        m.residual = res;
        if (res <= tol) {
            sigma = target;
            converged = true;
            break;
        }
        lambda = res < prev ? std::min(1.0, 2.0 * lambda) : std::max(lambda / 2.0, 1.0 / 64.0);
        prev = res;
        for (std::size_t j = 0; j < n; ++j) sigma[j] += lambda * (target[j] - sigma[j]);
        for (std::size_t j = 0; j < n; ++j) {
            const double next = j + 1 < n ? sigma[j + 1] : sigma[0] + kTwoPi;
            if (next - sigma[j] <= 0.0) throw NonmonotoneError("boundary correspondence lost monotonicity");
        }
    }
    m.iterations = it + (converged ? 1 : 0);
    if (!converged)
        throw NoConvergenceError("Theodorsen iteration stalled at residual " + std::to_string(m.residual));
    m.sigma = sigma;

    std::vector<cplx> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = std::polar(std::exp(trig_eval(m.log_rho, sigma[j]).real()), sigma[j]);
    auto c = detail::dft_coeffs(w);
    double neg = 0.0, tot = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        tot += std::norm(c[k]);
        if (detail::freq(k, n) < 0) neg += std::norm(c[k]);
    }
    m.leakage = tot > 0 ? std::sqrt(neg / tot) : 0.0;
    std::vector<cplx> tay(c.begin(), c.begin() + static_cast<long>(n / 2));
    // rotate the disk so that map'(0) > 0: map(z) -> map(z e^{i phi}), sigma(t) -> sigma(t + phi)
    if (std::abs(tay[1]) > 0.0) {
        const double phi = -std::arg(tay[1]);
        std::vector<cplx> dev(n);
        for (std::size_t j = 0; j < n; ++j) dev[j] = sigma[j] - t[j];
        const auto dc = to_fourier(PeriodicSamples(std::move(dev)));
        for (std::size_t j = 0; j < n; ++j) sigma[j] = t[j] + phi + trig_eval(dc, t[j] + phi).real();
        m.sigma = sigma;
        for (std::size_t k = 0; k < tay.size(); ++k) tay[k] *= std::polar(1.0, double(k) * phi);
    }
    tay[0] += b.center;
    m.taylor = PowerSeries(std::move(tay));
    return m;
}

cplx eval_conformal(const ConformalMap& m, cplx z) {
    if (std::abs(z) > 1.0 + 1e-12) throw DomainError("point outside the closed unit disk");
    return m.taylor.eval(z);
}

cplx eval_conformal_derivative(const ConformalMap& m, cplx z) {
    if (std::abs(z) > 1.0 + 1e-12) throw DomainError("point outside the closed unit disk");
    return m.taylor.eval_derivative(z);
}

namespace {

// t with sigma(t) = theta by linear interpolation of the grid correspondence.
double t_of_sigma(const ConformalMap& m, double theta) {
    const std::size_t n = m.sigma.size();
    const double th = wrap_into(theta, m.sigma[0]);
    auto it = std::upper_bound(m.sigma.begin(), m.sigma.end(), th);
    const std::size_t j = static_cast<std::size_t>(it - m.sigma.begin()) - 1;
    const double s0 = m.sigma[j];
    const double s1 = j + 1 < n ? m.sigma[j + 1] : m.sigma[0] + kTwoPi;
    const double t0 = PeriodicSamples::theta_of(j, n);
    return t0 + (th - s0) / (s1 - s0) * (kTwoPi / double(n));
}

}  // namespace

double invert_boundary(const ConformalMap& m, cplx w, double tol) {
    const cplx d = w - m.center;
    const double theta = std::arg(d);
    const double rho = m.rho_at(theta);
    if (std::abs(std::abs(d) - rho) > 1e-6 * rho) {
        const cplx z = invert_interior(m, w);
        if (std::abs(std::abs(z) - 1.0) > 1e-6) throw NoConvergenceError("point is not on the boundary");
        return wrap_into(std::arg(z), 0.0);
    }
    double t = t_of_sigma(m, theta);
    for (int it = 0; it < 60; ++it) {
        const cplx e = std::polar(1.0, t);
        const cplx dw = cplx(0.0, 1.0) * e * m.taylor.eval_derivative(e);
        const double step = ((w - m.taylor.eval(e)) / dw).real();
        t += step;
        if (std::abs(step) < 1e-15) break;
    }
    if (std::abs(m.taylor.eval(std::polar(1.0, t)) - w) > tol)
        throw NoConvergenceError("boundary inversion did not reach tolerance");
    return wrap_into(t, 0.0);
}

cplx invert_interior(const ConformalMap& m, cplx w, double tol) {
    const cplx d = w - m.center;
    const double theta = std::arg(d);
    const double frac = std::min(std::abs(d) / m.rho_at(theta), 0.999);
    cplx z = std::polar(frac, t_of_sigma(m, theta));
    double res = std::abs(m.taylor.eval(z) - w);
    for (int it = 0; it < 100 && res > tol; ++it) {
        const cplx step = (m.taylor.eval(z) - w) / m.taylor.eval_derivative(z);
        double lam = 1.0;
        for (int k = 0; k < 40; ++k, lam *= 0.5) {
            const cplx zn = z - lam * step;
            if (std::abs(zn) > 1.0) continue;
            const double rn = std::abs(m.taylor.eval(zn) - w);
            if (rn < res) {
                z = zn;
                res = rn;
                break;
            }
        }
        if (lam < 1e-12) break;
    }
    if (res > tol) throw NoConvergenceError("interior inversion did not converge");
    return z;
}

}  // namespace harmap
