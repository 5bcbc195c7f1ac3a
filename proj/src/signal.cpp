#include "olct/signal.hpp"

#include <algorithm>
#include <cmath>

namespace olct {

namespace {

double trapezoid_weight(std::size_t k, std::size_t n) {
    return (k == 0 || k + 1 == n) ? 0.5 : 1.0;
}

} // namespace

double l2_norm(const SampledSignal& f) {
    double acc = 0.0;
    const std::size_t n = f.size();
    for (std::size_t k = 0; k < n; ++k) {
        acc += trapezoid_weight(k, n) * std::norm(f.samples[k]);
    }
    return std::sqrt(acc * f.dx);
}

double l2_norm(const Spectrum& F) {
    double acc = 0.0;
    const std::size_t n = F.size();
    for (std::size_t j = 0; j < n; ++j) {
        acc += trapezoid_weight(j, n) * std::norm(F.samples[j]);
    }
    return std::sqrt(acc * F.du);
}

double l1_norm(const SampledSignal& f) {
    double acc = 0.0;
    const std::size_t n = f.size();
    for (std::size_t k = 0; k < n; ++k) {
        acc += trapezoid_weight(k, n) * std::abs(f.samples[k]);
    }
    return acc * f.dx;
}

cdouble inner_product(const SampledSignal& f, const SampledSignal& g) {
    if (f.size() != g.size()) throw GridMismatch("inner_product: size mismatch");
    cdouble acc = 0.0;
    const std::size_t n = f.size();
    for (std::size_t k = 0; k < n; ++k) {
        acc += trapezoid_weight(k, n) * f.samples[k] * std::conj(g.samples[k]);
    }
    return acc * f.dx;
}

double max_abs(const std::vector<cdouble>& v) {
    double peak = 0.0;
    for (const auto& z : v) peak = std::max(peak, std::abs(z));
    return peak;
}

bool edge_leakage(const SampledSignal& f, double threshold) {
    const double peak = max_abs(f.samples);
    if (peak == 0.0) return false;
    return std::abs(f.samples.front()) > threshold * peak ||
           std::abs(f.samples.back()) > threshold * peak;
}

} // namespace olct
