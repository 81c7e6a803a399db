#include "harmap/szego.hpp"

#include "harmap/errors.hpp"

#include <numbers>

namespace harmap {

SzegoMap::SzegoMap(std::vector<cplx> z, std::vector<cplx> dz) : z_(std::move(z)), dz_(std::move(dz)) {
    const std::size_t n = z_.size();
    if (n < 8 || dz_.size() != n) throw InputError("Szego map needs matching node and derivative arrays");
    tan_.resize(n);
    wgt_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double sp = std::abs(dz_[j]);
        if (sp == 0.0) throw DegenerateCurveError("stationary boundary node");
        tan_[j] = dz_[j] / sp;
        wgt_[j] = sp * kTwoPi / double(n);
    }
    // Kerzman-Stein kernel A(z,w) = H(z,w) - conj(H(w,z)), H(z,w) = T(w) / (2 pi i (w - z)).
    const cplx k = 1.0 / cplx(0.0, 2.0 * std::numbers::pi);
    Eigen::MatrixXcd m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) {
                m(i, j) = 1.0;
                continue;
            }
            const cplx d = z_[j] - z_[i];
            const cplx a = k * (tan_[j] / d - std::conj(tan_[i]) / std::conj(d));
            m(i, j) = -a * wgt_[j];
        }
    }
    lu_.compute(m);
}

void SzegoMap::solve(cplx a) {
    const std::size_t n = z_.size();
    a_ = a;
    const cplx k = 1.0 / cplx(0.0, 2.0 * std::numbers::pi);
    Eigen::VectorXcd rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs(i) = std::conj(k * tan_[i] / (z_[i] - a));
    const Eigen::VectorXcd s = lu_.solve(rhs);
    r_.resize(n);
    t_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r_[i] = cplx(0.0, -1.0) * tan_[i] * s(i) / std::conj(s(i));
        t_[i] = i == 0 ? std::arg(r_[0]) : t_[i - 1] + std::arg(r_[i] / r_[i - 1]);
    }
}

cplx SzegoMap::forward(cplx zeta) const {
    cplx num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < z_.size(); ++j) {
        const cplx d = z_[j] - zeta;
        if (d == cplx(0.0)) return r_[j];
        const cplx w = dz_[j] / d;
        num += r_[j] * w;
        den += w;
    }
    return num / den;
}

}  // namespace harmap
