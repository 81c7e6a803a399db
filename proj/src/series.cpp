#include "harmap/series.hpp"

#include "fft.hpp"
#include "harmap/errors.hpp"

#include <algorithm>

namespace harmap {

cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx horner_derivative(const std::vector<cplx>& c, cplx z) {
    cplx acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
    return acc;
}

PowerSeries PowerSeries::monomial(cplx a, std::size_t k, std::size_t order) {
    PowerSeries s = zero(std::max(order, k));
    s.c_[k] = a;
    return s;
}

cplx PowerSeries::eval(cplx z) const { return horner(c_, z); }
cplx PowerSeries::eval_derivative(cplx z) const { return horner_derivative(c_, z); }

PowerSeries PowerSeries::derivative() const {
    if (c_.size() <= 1) return PowerSeries({0.0});
    std::vector<cplx> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return PowerSeries(std::move(d));
}

PowerSeries PowerSeries::integral(cplx c0) const {
    std::vector<cplx> d(c_.size() + 1);
    d[0] = c0;
    for (std::size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / static_cast<double>(k + 1);
    return PowerSeries(std::move(d));
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    std::vector<cplx> d(order + 1, cplx(0.0));
    for (std::size_t k = 0; k <= order && k < c_.size(); ++k) d[k] = c_[k];
    return PowerSeries(std::move(d));
}

double PowerSeries::tail_fraction(std::size_t m) const {
    double tot = 0.0, tail = 0.0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        tot += std::norm(c_[k]);
        if (k + m >= c_.size()) tail += std::norm(c_[k]);
    }
    return tot > 0.0 ? tail / tot : 0.0;
}

std::vector<cplx> PowerSeries::on_circle(std::size_t n, double r) const {
    if (c_.size() > n || !is_pow2(n)) {
        std::vector<cplx> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = eval(std::polar(r, PeriodicSamples::theta_of(j, n)));
        return v;
    }
    std::vector<cplx> buf(n, cplx(0.0));
    double rk = 1.0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        buf[k % n] += c_[k] * rk;
        rk *= r;
    }
    return detail::dft_synth(buf);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), cplx(0.0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), cplx(0.0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

PowerSeries& PowerSeries::operator*=(cplx a) {
    for (auto& x : c_) x *= a;
    return *this;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
PowerSeries operator*(cplx a, PowerSeries b) { return b *= a; }

PowerSeries mul(const PowerSeries& a, const PowerSeries& b, std::size_t order) {
    std::vector<cplx> d(order + 1, cplx(0.0));
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size() && i <= order; ++i) {
        if (ac[i] == cplx(0.0)) continue;
        for (std::size_t j = 0; j < bc.size() && i + j <= order; ++j) d[i + j] += ac[i] * bc[j];
    }
    return PowerSeries(std::move(d));
}

PowerSeries reciprocal(const PowerSeries& a, std::size_t order) {
    const auto& ac = a.coeffs();
    if (std::abs(ac[0]) <= 1e-12) throw ReciprocalError("reciprocal of series with c0 ~ 0");
    std::vector<cplx> r(order + 1, cplx(0.0));
    r[0] = 1.0 / ac[0];
    for (std::size_t k = 1; k <= order; ++k) {
        cplx s = 0.0;
        for (std::size_t j = 1; j <= k && j < ac.size(); ++j) s += ac[j] * r[k - j];
        r[k] = -s * r[0];
    }
    return PowerSeries(std::move(r));
}

}  // namespace harmap
