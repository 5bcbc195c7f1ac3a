#ifndef OLCT_TRANSFORM_HPP
#define OLCT_TRANSFORM_HPP

#include "olct/params.hpp"
#include "olct/signal.hpp"

namespace olct {

// End-point weighting of the discretized integrals. Trapezoid suits decaying
// signals; rectangle is the exact (unitary) choice for periodic on-grid data.
enum class Quadrature {
    trapezoid,
    rectangle,
};

// Kernel K_M(u, x); requires the main branch.
cdouble kernel(const OlctParams& p, double u, double x);

// Native u-grid of the fast path: du = 2*pi*|b|/(n*dx), centered at zero.
GridSpec fast_u_grid(const OlctParams& p, std::size_t n, double dx);

/*
 * Direct-quadrature transform onto an arbitrary u-grid. O(n*m); the oracle
 * implementation. Grids are capped at 4096 points per axis (use olct_fast
 * beyond that).
 */
Spectrum olct_direct(const OlctParams& p, const SampledSignal& f, const GridSpec& u_grid,
                     Quadrature q = Quadrature::trapezoid);

/*
 * Chirp-FFT transform on the native grid. Pads to the next power of two;
 * the spectrum keeps the padded grid. Matches olct_direct on that grid.
 */
Spectrum olct_fast(const OlctParams& p, const SampledSignal& f,
                   Quadrature q = Quadrature::trapezoid);

// b = 0 branch: sqrt(d) e^{i cd/2 (u-u0)^2 + i w0 u} f(d(u-u0)), on the grid
// u_k = x_k/d + u0 so the argument lands on input samples. Requires d > 0.
SampledSignal olct_b_zero(const OlctParams& p, const SampledSignal& f);

// Adjoint (conjugate-kernel) inverse; mirrors olct_fast. The spectrum grid
// must satisfy the fast-path law, else GridMismatch.
SampledSignal olct_inverse(const Spectrum& F, Quadrature q = Quadrature::trapezoid);

// Adjoint inverse by direct quadrature onto an arbitrary x-grid.
SampledSignal olct_inverse_direct(const Spectrum& F, const GridSpec& x_grid,
                                  Quadrature q = Quadrature::trapezoid);

// The constant completing the printed inverse-parameter route; compared
// against the adjoint inverse in the verify suite.
enum class InverseConstant {
    def_c,    // e^{(i/2)(c d u0^2 - 2 a d u0 w0 + a b w0^2)}
    eq_c,     // e^{(i/b)(c d u0^2 - 2 a d u0 w0 + a b w0^2)}
    none,     // 1
};

// Flagged variant: f ~ C * O^{M^{-1}}[F] with M^{-1} = inverse_params(p).
SampledSignal olct_inverse_via_params(const Spectrum& F, const GridSpec& x_grid,
                                      InverseConstant constant);

} // namespace olct

#endif
