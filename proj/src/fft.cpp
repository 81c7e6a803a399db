#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace harmap::detail {

namespace {

std::mutex plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> plans;

// Plans are made in place on a scratch buffer and replayed with fftw_execute_dft,
// which is safe to call concurrently.
fftw_plan plan_for(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    std::vector<cplx> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), p, p, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans.emplace(key, plan);
    return plan;
}

}  // namespace

void fft(std::vector<cplx>& a, bool forward) {
    if (a.empty()) return;
    fftw_plan plan = plan_for(a.size(), forward ? FFTW_FORWARD : FFTW_BACKWARD);
    auto* p = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(plan, p, p);
}

std::vector<cplx> dft_coeffs(const std::vector<cplx>& samples) {
    std::vector<cplx> c = samples;
    fft(c, true);
    const double s = 1.0 / static_cast<double>(c.size());
    for (auto& x : c) x *= s;
    return c;
}

std::vector<cplx> dft_synth(const std::vector<cplx>& coeffs) {
    std::vector<cplx> v = coeffs;
    fft(v, false);
    return v;
}

}  // namespace harmap::detail
