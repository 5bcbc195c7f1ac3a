#ifndef OLCT_SIGNAL_HPP
#define OLCT_SIGNAL_HPP

#include <cstddef>
#include <vector>

#include "olct/errors.hpp"
#include "olct/params.hpp"

namespace olct {

// Uniform grid: point k sits at start + k*step.
struct GridSpec {
    double start;
    double step;
    std::size_t n;
};

/*
 * Complex-valued function sampled on a uniform x-grid.
 * Invariants: dx > 0, at least two samples.
 */
struct SampledSignal {
    double x_start = 0.0;
    double dx = 1.0;
    std::vector<cdouble> samples;

    SampledSignal() = default;
    SampledSignal(double x_start_, double dx_, std::vector<cdouble> samples_)
        : x_start(x_start_), dx(dx_), samples(std::move(samples_)) {
        if (dx <= 0.0) throw GridInvalid("SampledSignal: dx must be positive");
        if (samples.size() < 2) throw GridInvalid("SampledSignal: need at least 2 samples");
    }

    std::size_t size() const { return samples.size(); }
    double x(std::size_t k) const { return x_start + static_cast<double>(k) * dx; }
    GridSpec grid() const { return {x_start, dx, samples.size()}; }
};

/*
 * Complex OLCT values on a uniform u-grid, tagged with the parameters that
 * produced them. origin_* record the x-grid of the transformed signal so the
 * inverse can target it exactly.
 */
struct Spectrum {
    double u_start = 0.0;
    double du = 1.0;
    std::vector<cdouble> samples;
    OlctParams params{0.0, 1.0, -1.0, 0.0, 0.0, 0.0};
    double origin_x_start = 0.0;
    double origin_dx = 1.0;

    Spectrum() = default;
    Spectrum(double u_start_, double du_, std::vector<cdouble> samples_, OlctParams params_)
        : u_start(u_start_), du(du_), samples(std::move(samples_)), params(params_) {
        if (du <= 0.0) throw GridInvalid("Spectrum: du must be positive");
        if (samples.size() < 2) throw GridInvalid("Spectrum: need at least 2 samples");
    }

    std::size_t size() const { return samples.size(); }
    double u(std::size_t j) const { return u_start + static_cast<double>(j) * du; }
    GridSpec grid() const { return {u_start, du, samples.size()}; }
};

// Trapezoid-quadrature L2 norm, inner product and L1 norm on the sample grid.
double l2_norm(const SampledSignal& f);
double l2_norm(const Spectrum& F);
double l1_norm(const SampledSignal& f);
cdouble inner_product(const SampledSignal& f, const SampledSignal& g);  // <f,g> = int f conj(g)

double max_abs(const std::vector<cdouble>& v);

// True when an end sample exceeds threshold*max|f| (signal does not decay on the grid).
bool edge_leakage(const SampledSignal& f, double threshold = 1e-6);

} // namespace olct

#endif
