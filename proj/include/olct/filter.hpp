#ifndef OLCT_FILTER_HPP
#define OLCT_FILTER_HPP

#include <cstdint>

#include "olct/params.hpp"
#include "olct/signal.hpp"

namespace olct {

/*
 * Passband description in the u-domain. low_pass/high_pass cut on |u|;
 * band_pass takes a signed interval [edge1, edge2] (passbands of complex
 * signals need not be symmetric). rolloff is the raised-cosine transition
 * half-width: the mask crosses 1/2 exactly at each edge.
 */
struct FilterSpec {
    enum class Kind { low_pass, band_pass, high_pass };
    Kind kind = Kind::low_pass;
    double edge1 = 0.0;
    double edge2 = 0.0;  // band_pass only; edge1 < edge2 required
    double rolloff = 0.0;
};

// Real mask in [0,1] on the given u-grid; throws EdgeOutOfRange when an edge
// (or its transition) lies outside the grid.
std::vector<double> design_mask(const FilterSpec& spec, const GridSpec& u_grid);

// olct_inverse(olct_fast(f) .* mask); the mask must live on f's fast grid.
SampledSignal apply_filter(const OlctParams& p, const SampledSignal& f,
                           const std::vector<double>& mask);
SampledSignal apply_filter(const OlctParams& p, const SampledSignal& f,
                           const std::vector<cdouble>& mask);

// Mask realizing convolution with prototype g: u -> 2 T(u) G(2u) sampled on
// the fast grid of a signal sharing g's grid.
std::vector<cdouble> mask_from_prototype(const OlctParams& p, const SampledSignal& g);

// 10 log10(||clean||^2 / ||test - clean||^2); +infinity when test == clean.
double snr_db(const SampledSignal& clean, const SampledSignal& test);

struct SnrReport {
    double snr_in_db = 0.0;
    double snr_out_db = 0.0;
    double gain_db = 0.0;  // == snr_out_db - snr_in_db
};

/*
 * Chirp-denoising demonstration: an LFM chirp matched to the transform
 * (rate = -a/b makes it compact in the u-domain), an out-of-band
 * interference tone, and seeded broadband noise; band-pass filtering on the
 * measured occupied band.
 */
struct DenoiseConfig {
    OlctParams params{1.0, 1.0, 1.0, 2.0, 0.5, -0.3};
    GridSpec grid{-16.0, 1.0 / 128.0, 4096};
    double chirp_rate = 0.0;          // 0 means matched: -a/b
    double center_freq = 2.0;
    double envelope_width = 3.0;
    double interference_offset = 10.0;  // in units of the measured bandwidth
    double interference_level = 1.0;    // amplitude relative to the chirp peak
    double noise_level_db = -10.0;      // noise energy relative to signal energy
    std::uint64_t seed = 42;
    double band_threshold = 1e-3;       // occupied-band measurement threshold
    double rolloff = 0.0;               // 0 means default 2*du
};

struct DenoiseResult {
    SnrReport snr;
    SampledSignal clean;
    SampledSignal received;
    SampledSignal output;
    Spectrum spectrum_in;
    Spectrum spectrum_filtered;
    double band_lo = 0.0;
    double band_hi = 0.0;
};

DenoiseResult demo_chirp_denoise(const DenoiseConfig& config);

} // namespace olct

#endif
