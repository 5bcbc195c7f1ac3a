#include "olct/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "olct/convolution.hpp"
#include "olct/errors.hpp"
#include "olct/fft.hpp"
#include "olct/generate.hpp"
#include "olct/transform.hpp"

namespace olct {

namespace {

// Raised cosine rising through 1/2 at `edge`, transition half-width `roll`.
double rising_edge(double u, double edge, double roll) {
    if (roll <= 0.0) return u >= edge ? 1.0 : 0.0;
    if (u <= edge - roll) return 0.0;
    if (u >= edge + roll) return 1.0;
    return 0.5 * (1.0 + std::sin(0.5 * std::numbers::pi * (u - edge) / roll));
}

double falling_edge(double u, double edge, double roll) {
    return rising_edge(2.0 * edge - u, edge, roll);
}

void check_edge(double edge, double roll, const GridSpec& g, const char* what) {
    const double lo = g.start;
    const double hi = g.start + g.step * static_cast<double>(g.n - 1);
    if (edge - roll < lo || edge + roll > hi) {
        throw EdgeOutOfRange(std::string("design_mask: ") + what +
                             " (with its transition) lies outside the u-grid");
    }
}

} // namespace

std::vector<double> design_mask(const FilterSpec& spec, const GridSpec& u_grid) {
    if (u_grid.n < 2 || u_grid.step <= 0.0) throw GridInvalid("design_mask: bad u-grid");
    if (spec.rolloff < 0.0) throw EdgeOutOfRange("design_mask: rolloff must be >= 0");

    std::vector<double> mask(u_grid.n, 0.0);
    switch (spec.kind) {
        case FilterSpec::Kind::low_pass:
            check_edge(spec.edge1, spec.rolloff, u_grid, "edge");
            for (std::size_t j = 0; j < u_grid.n; ++j) {
                const double u = u_grid.start + static_cast<double>(j) * u_grid.step;
                mask[j] = falling_edge(std::abs(u), spec.edge1, spec.rolloff);
            }
            break;
        case FilterSpec::Kind::high_pass:
            check_edge(spec.edge1, spec.rolloff, u_grid, "edge");
            for (std::size_t j = 0; j < u_grid.n; ++j) {
                const double u = u_grid.start + static_cast<double>(j) * u_grid.step;
                mask[j] = rising_edge(std::abs(u), spec.edge1, spec.rolloff);
            }
            break;
        case FilterSpec::Kind::band_pass:
            if (!(spec.edge1 < spec.edge2)) {
                throw EdgeOutOfRange("design_mask: band_pass requires edge1 < edge2");
            }
            if (spec.rolloff >= 0.5 * (spec.edge2 - spec.edge1)) {
                throw EdgeOutOfRange("design_mask: rolloff must be < (edge2 - edge1)/2");
            }
            check_edge(spec.edge1, spec.rolloff, u_grid, "edge1");
            check_edge(spec.edge2, spec.rolloff, u_grid, "edge2");
            for (std::size_t j = 0; j < u_grid.n; ++j) {
                const double u = u_grid.start + static_cast<double>(j) * u_grid.step;
                mask[j] = rising_edge(u, spec.edge1, spec.rolloff) *
                          falling_edge(u, spec.edge2, spec.rolloff);
            }
            break;
    }
    return mask;
}

SampledSignal apply_filter(const OlctParams& p, const SampledSignal& f,
                           const std::vector<double>& mask) {
    std::vector<cdouble> cmask(mask.begin(), mask.end());
    return apply_filter(p, f, cmask);
}

/*
 * Two mask layouts are accepted. A mask on the native fast grid (size n) acts
 * as a plain multiplicative filter on F(u). A mask on the doubled-density
 * grid (size 2n) is a half-argument product mask indexed by 2u, as produced
 * by mask_from_prototype: the output spectrum is H(u) = F(2u) * mask(2u) on
 * the native grid, which realizes the convolution theorem's product form.
 */
SampledSignal apply_filter(const OlctParams& p, const SampledSignal& f,
                           const std::vector<cdouble>& mask) {
    const std::size_t n = next_pow2(f.size());

    if (mask.size() == n) {
        Spectrum F = olct_fast(p, f);
        for (std::size_t j = 0; j < F.size(); ++j) F.samples[j] *= mask[j];
        return olct_inverse(F);
    }

    if (mask.size() == 2 * n) {
        std::vector<cdouble> padded(2 * n, cdouble(0.0, 0.0));
        std::copy(f.samples.begin(), f.samples.end(), padded.begin());
        const Spectrum F2 = olct_fast(p, SampledSignal(f.x_start, f.dx, std::move(padded)));

        const GridSpec ug = fast_u_grid(p, f.size(), f.dx);
        std::vector<cdouble> h(ug.n, cdouble(0.0, 0.0));
        for (std::size_t j = 0; j < ug.n; ++j) {
            // 2*u_j sits at fine-grid index 4j - n; outside it the spectra of
            // in-band signals have already decayed.
            const long idx = 4 * static_cast<long>(j) - static_cast<long>(n);
            if (idx < 0 || idx >= static_cast<long>(F2.size())) continue;
            h[j] = F2.samples[static_cast<std::size_t>(idx)] *
                   mask[static_cast<std::size_t>(idx)];
        }
        Spectrum H(ug.start, ug.step, std::move(h), p);
        H.origin_x_start = f.x_start;
        H.origin_dx = f.dx;
        return olct_inverse(H);
    }

    throw GridMismatch("apply_filter: mask size matches neither the fast grid nor its double");
}

std::vector<cdouble> mask_from_prototype(const OlctParams& p, const SampledSignal& g) {
    if (!p.main_branch()) throw DegenerateCase("mask_from_prototype: requires |b| > 0");

    // Doubled-density spectrum of g; the mask value at fine-grid point v is
    // 2 T(v/2) G(v), i.e. the product-form factor indexed by v = 2u.
    const std::size_t n = next_pow2(g.size());
    std::vector<cdouble> padded(2 * n, cdouble(0.0, 0.0));
    std::copy(g.samples.begin(), g.samples.end(), padded.begin());
    const Spectrum G2 = olct_fast(p, SampledSignal(g.x_start, g.dx, std::move(padded)));

    std::vector<cdouble> mask(G2.size());
    for (std::size_t i = 0; i < G2.size(); ++i) {
        mask[i] = 2.0 * chirp_T(p, 0.5 * G2.u(i)) * G2.samples[i];
    }
    return mask;
}

double snr_db(const SampledSignal& clean, const SampledSignal& test) {
    if (clean.size() != test.size()) throw GridMismatch("snr_db: size mismatch");
    double sig = 0.0, err = 0.0;
    for (std::size_t k = 0; k < clean.size(); ++k) {
        sig += std::norm(clean.samples[k]);
        err += std::norm(test.samples[k] - clean.samples[k]);
    }
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(sig / err);
}

DenoiseResult demo_chirp_denoise(const DenoiseConfig& cfg) {
    const OlctParams& p = cfg.params;
    if (!p.main_branch()) throw DegenerateCase("demo_chirp_denoise: requires |b| > 0");
    if (cfg.grid.n < 16 || cfg.grid.step <= 0.0) throw ConfigInvalid("demo: bad grid");
    if (cfg.envelope_width <= 0.0) throw ConfigInvalid("demo: envelope_width must be > 0");

    // An LFM chirp with rate -a/b cancels the kernel's quadratic phase, so its
    // transform is as compact as its envelope allows.
    const double rate = cfg.chirp_rate != 0.0 ? cfg.chirp_rate : -p.a / p.b;
    const SampledSignal clean =
        gen_lfm_chirp(cfg.grid, rate, cfg.center_freq, cfg.envelope_width);

    // Occupied band of the clean component.
    const Spectrum S = olct_fast(p, clean);
    const double peak = max_abs(S.samples);
    double lo = 0.0, hi = 0.0;
    bool found = false;
    for (std::size_t j = 0; j < S.size(); ++j) {
        if (std::abs(S.samples[j]) > cfg.band_threshold * peak) {
            const double u = S.u(j);
            if (!found) {
                lo = hi = u;
                found = true;
            } else {
                hi = u;
            }
        }
    }
    if (!found) throw ConfigInvalid("demo: clean signal has empty spectrum");

    // Interference: a tone displaced by interference_offset bandwidths.
    const double bw = hi - lo;
    const double tone_freq = cfg.center_freq + cfg.interference_offset * std::max(bw, S.du);
    std::vector<cdouble> rx(cfg.grid.n);
    {
        const SampledSignal tone = gen_tone(cfg.grid, tone_freq);
        const SampledSignal env = gen_gaussian(cfg.grid, 0.0, cfg.envelope_width);
        const double sig_energy = l2_norm(clean) * l2_norm(clean);
        // Below -250 dB the noise is below double precision; treat as absent.
        const double noise_energy = cfg.noise_level_db > -250.0
                                        ? sig_energy * std::pow(10.0, cfg.noise_level_db / 10.0)
                                        : 0.0;
        const SampledSignal wn = gen_noise(cfg.grid, cfg.seed, 1.0);
        const double wn_energy = l2_norm(wn) * l2_norm(wn);
        const double scale = wn_energy > 0.0 ? std::sqrt(noise_energy / wn_energy) : 0.0;
        for (std::size_t k = 0; k < cfg.grid.n; ++k) {
            rx[k] = clean.samples[k] +
                    cfg.interference_level * tone.samples[k] * env.samples[k].real() +
                    scale * wn.samples[k];
        }
    }
    const SampledSignal received(cfg.grid.start, cfg.grid.step, std::move(rx));

    const double roll = cfg.rolloff != 0.0 ? cfg.rolloff : 2.0 * S.du;
    FilterSpec spec;
    spec.kind = FilterSpec::Kind::band_pass;
    spec.edge1 = lo - roll;
    spec.edge2 = hi + roll;
    spec.rolloff = roll;
    const std::vector<double> mask = design_mask(spec, S.grid());

    Spectrum Sin = olct_fast(p, received);
    Spectrum Sfil = Sin;
    for (std::size_t j = 0; j < Sfil.size(); ++j) Sfil.samples[j] *= mask[j];
    SampledSignal out = olct_inverse(Sfil);

    DenoiseResult res;
    res.snr.snr_in_db = snr_db(clean, received);
    res.snr.snr_out_db = snr_db(clean, out);
    // A clean input has nothing to remove: the gain is zero by definition
    // (the difference of sentinel/near-sentinel SNRs is meaningless).
    res.snr.gain_db = std::isinf(res.snr.snr_in_db)
                          ? 0.0
                          : res.snr.snr_out_db - res.snr.snr_in_db;
    res.clean = clean;
    res.received = received;
    res.output = std::move(out);
    res.spectrum_in = std::move(Sin);
    res.spectrum_filtered = std::move(Sfil);
    res.band_lo = lo;
    res.band_hi = hi;
    return res;
}

} // namespace olct
