#include "olct/generate.hpp"

#include <cmath>
#include <numbers>

#include "olct/errors.hpp"
#include "olct/fft.hpp"
#include "olct/transform.hpp"

namespace olct {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_grid(const GridSpec& g) {
    if (g.n < 2 || g.step <= 0.0) throw GridInvalid("generator grid invalid");
}

} // namespace

double SplitMix64::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = kTwoPi * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
}

SampledSignal gen_gaussian(const GridSpec& grid, double center, double width) {
    check_grid(grid);
    if (width <= 0.0) throw GridInvalid("gen_gaussian: width must be positive");
    std::vector<cdouble> v(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
        const double x = grid.start + static_cast<double>(k) * grid.step;
        const double t = (x - center) / width;
        v[k] = std::exp(-0.5 * t * t);
    }
    return SampledSignal(grid.start, grid.step, std::move(v));
}

SampledSignal gen_lfm_chirp(const GridSpec& grid, double rate, double center_freq,
                            double envelope_width) {
    check_grid(grid);
    if (envelope_width <= 0.0) throw GridInvalid("gen_lfm_chirp: envelope_width must be positive");
    std::vector<cdouble> v(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
        const double x = grid.start + static_cast<double>(k) * grid.step;
        const double t = x / envelope_width;
        v[k] = std::polar(std::exp(-0.5 * t * t), 0.5 * rate * x * x + center_freq * x);
    }
    return SampledSignal(grid.start, grid.step, std::move(v));
}

SampledSignal gen_rect(const GridSpec& grid, double lo, double hi) {
    check_grid(grid);
    if (!(lo < hi)) throw GridInvalid("gen_rect: requires lo < hi");
    std::vector<cdouble> v(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
        const double x = grid.start + static_cast<double>(k) * grid.step;
        v[k] = (x >= lo && x <= hi) ? 1.0 : 0.0;
    }
    return SampledSignal(grid.start, grid.step, std::move(v));
}

SampledSignal gen_tone(const GridSpec& grid, double freq) {
    check_grid(grid);
    std::vector<cdouble> v(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
        const double x = grid.start + static_cast<double>(k) * grid.step;
        v[k] = std::polar(1.0, freq * x);
    }
    return SampledSignal(grid.start, grid.step, std::move(v));
}

namespace {

SampledSignal from_spectrum_mask(const OlctParams& p, const GridSpec& grid, double u_lo,
                                 double u_hi, double smooth, bool highpass) {
    check_grid(grid);
    if (!p.main_branch()) throw DegenerateCase("band-limited generator: requires |b| > 0");
    if (!(u_lo < u_hi)) throw GridInvalid("band-limited generator: requires u_lo < u_hi");

    const GridSpec ug = fast_u_grid(p, grid.n, grid.step);
    const double s = 0.5 * smooth;
    auto rise = [&](double v, double e) {
        if (s <= 0.0) return v >= e ? 1.0 : 0.0;
        if (v <= e - s) return 0.0;
        if (v >= e + s) return 1.0;
        return 0.5 * (1.0 + std::sin(0.5 * std::numbers::pi * (v - e) / s));
    };

    std::vector<cdouble> mask(ug.n);
    for (std::size_t j = 0; j < ug.n; ++j) {
        const double u = ug.start + static_cast<double>(j) * ug.step;
        const double w = highpass ? std::abs(u) : u;
        mask[j] = rise(w, u_lo) * (1.0 - rise(w, u_hi));
    }

    Spectrum F(ug.start, ug.step, std::move(mask), p);
    F.origin_x_start = grid.start;
    F.origin_dx = grid.step;
    // Rectangle weights: the fixture is a periodic trig polynomial on the
    // grid, for which the plain Riemann sum is the exact unitary inverse.
    return olct_inverse(F, Quadrature::rectangle);
}

} // namespace

SampledSignal gen_olct_bandlimited(const OlctParams& p, const GridSpec& grid, double u_lo,
                                   double u_hi, double smooth) {
    return from_spectrum_mask(p, grid, u_lo, u_hi, smooth, false);
}

SampledSignal gen_olct_highpass(const OlctParams& p, const GridSpec& grid, double u_lo,
                                double u_hi, double smooth) {
    if (!(0.0 <= u_lo)) throw GridInvalid("gen_olct_highpass: requires u_lo >= 0");
    return from_spectrum_mask(p, grid, u_lo, u_hi, smooth, true);
}

SampledSignal gen_noise(const GridSpec& grid, std::uint64_t seed, double level) {
    check_grid(grid);
    if (level < 0.0) throw GridInvalid("gen_noise: level must be >= 0");
    SplitMix64 rng(seed);
    const double s = level / std::sqrt(2.0);
    std::vector<cdouble> v(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
        const double re = rng.normal();
        const double im = rng.normal();
        v[k] = cdouble(s * re, s * im);
    }
    return SampledSignal(grid.start, grid.step, std::move(v));
}

SampledSignal gen_random_smooth(const GridSpec& grid, std::uint64_t seed,
                                double bandwidth_fraction, double envelope_width) {
    check_grid(grid);
    if (bandwidth_fraction <= 0.0 || bandwidth_fraction > 1.0) {
        throw GridInvalid("gen_random_smooth: bandwidth_fraction in (0,1]");
    }
    if (envelope_width < 0.0) throw GridInvalid("gen_random_smooth: envelope_width >= 0");
    // Random spectrum under a Gaussian window, inverted, then enveloped so the
    // result decays on the grid.
    SplitMix64 rng(seed);
    const std::size_t n = grid.n;
    std::vector<cdouble> spec(n, cdouble(0.0, 0.0));
    const double cut = bandwidth_fraction * 0.5 * static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double fj = j <= n / 2 ? static_cast<double>(j)
                                     : static_cast<double>(j) - static_cast<double>(n);
        const double t = fj / cut;
        const double w = std::exp(-0.5 * t * t);
        spec[j] = cdouble(rng.normal(), rng.normal()) * w;
    }
    fft_inverse(spec);

    const double mid = grid.start + 0.5 * grid.step * static_cast<double>(n - 1);
    const double env_width = envelope_width > 0.0
                                 ? envelope_width
                                 : 0.125 * grid.step * static_cast<double>(n);
    std::vector<cdouble> sig(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = grid.start + static_cast<double>(k) * grid.step;
        const double t = (x - mid) / env_width;
        sig[k] = spec[k] * std::exp(-0.5 * t * t) / static_cast<double>(n);
    }
    const double peak = max_abs(sig);
    if (peak > 0.0) {
        for (auto& z : sig) z /= peak;
    }
    return SampledSignal(grid.start, grid.step, std::move(sig));
}

SampledSignal generate(const GeneratorSpec& spec) {
    auto need = [&](std::size_t k) {
        if (spec.args.size() < k) throw ConfigInvalid("generate: missing arguments for " + spec.kind);
    };
    if (spec.kind == "gaussian") {
        need(2);
        return gen_gaussian(spec.grid, spec.args[0], spec.args[1]);
    }
    if (spec.kind == "lfm_chirp") {
        need(3);
        return gen_lfm_chirp(spec.grid, spec.args[0], spec.args[1], spec.args[2]);
    }
    if (spec.kind == "rect") {
        need(2);
        return gen_rect(spec.grid, spec.args[0], spec.args[1]);
    }
    if (spec.kind == "tone") {
        need(1);
        return gen_tone(spec.grid, spec.args[0]);
    }
    if (spec.kind == "olct_bandlimited") {
        need(3);
        return gen_olct_bandlimited(spec.params, spec.grid, spec.args[0], spec.args[1],
                                    spec.args[2]);
    }
    if (spec.kind == "olct_highpass") {
        need(3);
        return gen_olct_highpass(spec.params, spec.grid, spec.args[0], spec.args[1],
                                 spec.args[2]);
    }
    if (spec.kind == "noise") {
        need(1);
        return gen_noise(spec.grid, spec.seed, spec.args[0]);
    }
    if (spec.kind == "random_smooth") {
        return gen_random_smooth(spec.grid, spec.seed);
    }
    throw ConfigInvalid("generate: unknown kind '" + spec.kind + "'");
}

} // namespace olct
