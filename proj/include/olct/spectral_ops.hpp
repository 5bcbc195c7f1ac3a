#ifndef OLCT_SPECTRAL_OPS_HPP
#define OLCT_SPECTRAL_OPS_HPP

#include "olct/params.hpp"
#include "olct/report.hpp"
#include "olct/signal.hpp"

namespace olct {

enum class DerivScheme {
    spectral,           // FFT derivative of the chirp-corrected signal (default)
    finite_difference,  // 4th-order central differences, for non-smooth inputs
};

// Delta f = -(f' + (i/b)(a x + u0) f). Equivalently -e^{-i phi} d/dx(e^{i phi} f)
// with phi = (a x^2 + 2 u0 x)/(2b); the spectral scheme differentiates the
// chirp-corrected signal, which is exact for OLCT-band-limited grid fixtures.
SampledSignal delta_op(const OlctParams& p, const SampledSignal& f,
                       DerivScheme scheme = DerivScheme::spectral);

// n-fold application; n = 0 returns f.
SampledSignal delta_op_n(const OlctParams& p, const SampledSignal& f, unsigned n,
                         DerivScheme scheme = DerivScheme::spectral);

// (B f)(x) = e^{-i phi(x)} * integral_x^{x_end} e^{i phi(t)} f(t) dt by reverse
// cumulative trapezoid; (B f)(x_{n-1}) = 0 by truncation.
SampledSignal boas_op(const OlctParams& p, const SampledSignal& f);

enum class EstimateMethod {
    last_value,  // roots.back()
    richardson,  // ratio-sequence extrapolation against {1, 1/n} (default)
    root_fit,    // least-squares gamma + c/n on the roots
};

/*
 * Norm sequence of iterated operator applications with its extrapolated
 * limit. norms[i] = ||op^{i+1} f||_2, roots[i] = norms[i]^{1/(i+1)}.
 * Norms accumulate in log space; if a step over- or underflows the sequence
 * is capped at n_effective.
 */
struct OperatorSequence {
    std::vector<double> norms;
    std::vector<double> roots;
    double estimate = 0.0;
    EstimateMethod method = EstimateMethod::richardson;
    double gamma_direct = 0.0;  // thresholded-support measurement from the spectrum
    bool degenerate = false;
    unsigned n_effective = 0;
};

// Band-limit estimator: ||Delta^n f||^{1/n} -> gamma = sup{|u/b| : F(u) != 0}.
OperatorSequence pw_bandwidth_estimate(const OlctParams& p, const SampledSignal& f,
                                       unsigned n_max,
                                       EstimateMethod method = EstimateMethod::richardson);

// High-pass estimator: ||B^n f||^{1/n} -> R = 1/inf{|u/b| : u in supp F}.
// Each B application is followed by projecting out the chirp-domain DC mode
// (the truncation boundary term), which restores the high-pass hypothesis.
OperatorSequence boas_highpass_estimate(const OlctParams& p, const SampledSignal& f,
                                        unsigned n_max,
                                        EstimateMethod method = EstimateMethod::richardson);

// O^M(Delta^n f)(u) vs (-i u/b)^n F(u) on the interior 80% of the u-grid.
VerificationReport verify_delta_relation(const OlctParams& p, const SampledSignal& f,
                                         unsigned n, double tolerance);

// O^M(B^n f)(u) vs (b/(i u))^n F(u) on |u/b| >= u_exclusion; both signs are
// checked and the matching one is recorded (details["sign"]).
VerificationReport verify_boas_relation(const OlctParams& p, const SampledSignal& f,
                                        unsigned n, double tolerance,
                                        double u_exclusion = 0.5);

} // namespace olct

#endif
