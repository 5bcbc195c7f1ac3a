#ifndef OLCT_GENERATE_HPP
#define OLCT_GENERATE_HPP

#include <cstdint>
#include <string>

#include "olct/params.hpp"
#include "olct/signal.hpp"

namespace olct {

/*
 * splitmix64: the 64-bit mixing generator from Steele, Lea & Flood (constants
 * 0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9, 0x94D049BB133111EB). Deterministic
 * and reproducible from the seed; Gaussian deviates via Box-Muller.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1]; never returns 0, so log() below is safe.
    double uniform() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Standard normal (Box-Muller).
    double normal();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Analytic shapes use the unit-peak convention.
SampledSignal gen_gaussian(const GridSpec& grid, double center, double width);
SampledSignal gen_lfm_chirp(const GridSpec& grid, double rate, double center_freq,
                            double envelope_width);
SampledSignal gen_rect(const GridSpec& grid, double lo, double hi);
SampledSignal gen_tone(const GridSpec& grid, double freq);

// Inverse OLCT of an analytic raised-cosine-edged spectrum; transitions are
// centered on the stated edges with half-width smooth/2, so the support
// widens by at most smooth. Band-limited fixture of the spectral estimators.
SampledSignal gen_olct_bandlimited(const OlctParams& p, const GridSpec& grid, double u_lo,
                                   double u_hi, double smooth);

// High-pass fixture: spectrum supported on |u| in [u_lo, u_hi] (both signs).
SampledSignal gen_olct_highpass(const OlctParams& p, const GridSpec& grid, double u_lo,
                                double u_hi, double smooth);

// Complex white Gaussian noise; level is the per-sample RMS (E|z|^2 = level^2).
SampledSignal gen_noise(const GridSpec& grid, std::uint64_t seed, double level);

// Seeded smooth decaying test signal: band-limited complex noise under a
// Gaussian envelope (width 0 means span/8). Test/verify fixture.
SampledSignal gen_random_smooth(const GridSpec& grid, std::uint64_t seed,
                                double bandwidth_fraction = 0.25,
                                double envelope_width = 0.0);

// String-keyed dispatcher used by the CLI: kind plus numeric arguments.
struct GeneratorSpec {
    std::string kind;
    GridSpec grid{-8.0, 1.0 / 64.0, 1024};
    std::vector<double> args;
    OlctParams params{0.0, 1.0, -1.0, 0.0, 0.0, 0.0};
    std::uint64_t seed = 0;
};

SampledSignal generate(const GeneratorSpec& spec);

} // namespace olct

#endif
