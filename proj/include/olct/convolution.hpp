#ifndef OLCT_CONVOLUTION_HPP
#define OLCT_CONVOLUTION_HPP

#include "olct/params.hpp"
#include "olct/report.hpp"
#include "olct/signal.hpp"
#include "olct/transform.hpp"

namespace olct {

/*
 * Two printed forms of the convolution kernel bracket circulate; they differ
 * in the coefficient of the tau*x cross term. Only `separable` admits the
 * spectral product identity (the verify suite documents both).
 */
enum class ConvBracket {
    separable,   // a*(3/4 x^2 + tau x - 2 tau^2): factorizes after xi = x/2 - tau
    as_printed,  // a*((x/2 + 2 tau)^2 - 6 tau^2 + x^2/2)
};

// Chirp factor T(u) of the spectral-product identity.
enum class ChirpVariant {
    product,     // e^{(i/2b)(6u(d u0 - b w0) - 7 d u^2)}; completes the product identity
    as_printed,  // e^{-(i/2b)(6u(d u0 - b w0) + 7 d u^2)}
};

// Exponent completion of the correlation definition (the printed term
// -4(d u0 - b w0) carries no variable factor; the proof uses -u(...)).
enum class CorrExponent {
    proof_consistent,  // -x*(d u0 - b w0)
    as_printed,        // -4*(d u0 - b w0)
};

cdouble chirp_T(const OlctParams& p, double u, ChirpVariant variant = ChirpVariant::product);

// Time-domain convolution by quadrature, O(n^2). f, g must share a grid whose
// half-step lattice contains x/2 - tau (any centered grid qualifies).
SampledSignal convolve_time(const OlctParams& p, const SampledSignal& f, const SampledSignal& g,
                            ConvBracket bracket = ConvBracket::separable);

// Spectral-product route: 2 T(u) F(2u) G(2u) on a doubled-density grid,
// inverted back to the signal grid. O(n log n).
SampledSignal convolve_spectral(const OlctParams& p, const SampledSignal& f,
                                const SampledSignal& g);

// Correlation by quadrature; both exponent variants retained permanently.
SampledSignal correlate(const OlctParams& p, const SampledSignal& f, const SampledSignal& g,
                        CorrExponent variant = CorrExponent::proof_consistent);

// Left side via convolve_time + direct transform, right side via direct
// transforms at 2u times chirp_T. details carry the full bracket x chirp
// error matrix; passed gates the default (separable, product) pairing.
VerificationReport verify_convolution_theorem(const OlctParams& p, const SampledSignal& f,
                                              const SampledSignal& g, double tolerance = 1e-6);

// ||f (+) g||_1 <= sqrt(4/(2 pi |b|)) ||f||_1 ||g||_1; records the achieved ratio.
VerificationReport verify_l1_bound(const OlctParams& p, const SampledSignal& f,
                                   const SampledSignal& g);

// Four-way check of the correlation identity: chirp in {proof, T(x) literal}
// crossed with both exponent variants; reports the error matrix and which
// pairings pass.
VerificationReport verify_correlation_theorem(const OlctParams& p, const SampledSignal& f,
                                              const SampledSignal& g, double tolerance = 1e-6);

/*
 * Band-limited evaluation of a sampled signal on its half-step lattice
 * (FFT upsampling by 2; zero outside the grid). Shared by the quadrature
 * convolution and correlation.
 */
class HalfGridEval {
public:
    explicit HalfGridEval(const SampledSignal& g);

    // Value at x_start + idx * (dx/2); zero outside the upsampled range.
    cdouble at_half_index(long idx) const;

    // Index of point x on the half lattice; throws GridMismatch when off-lattice.
    long half_index(double x) const;

private:
    std::vector<cdouble> upsampled_;
    double x_start_;
    double half_step_;
};

} // namespace olct

#endif
