#ifndef OLCT_PARAMS_HPP
#define OLCT_PARAMS_HPP

#include <complex>

namespace olct {

using cdouble = std::complex<double>;

inline constexpr double kUnimodularityTol = 1e-12;
inline constexpr double kBranchThreshold = 1e-12;  // main branch iff |b| > this

/*
 * The six-parameter set {a, b, c, d, u0, w0} of the offset linear canonical
 * transform, constrained by ad - bc = 1. u0 is the frequency-domain offset,
 * w0 the modulation offset. Immutable after construction.
 */
struct OlctParams {
    double a;
    double b;
    double c;
    double d;
    double u0;
    double w0;

    bool main_branch() const { return std::abs(b) > kBranchThreshold; }

    // sqrt(1/(2*pi*i*b)), principal branch.
    cdouble amplitude() const;

    // exp(i*d*u0^2 / (2b)); the constant phase in front of the kernel.
    cdouble offset_prefactor() const;
};

// Validates unimodularity; throws UnimodularityViolation.
OlctParams make_params(double a, double b, double c, double d, double u0, double w0);

// Classical special cases.
OlctParams ft_params();                             // (0, 1, -1, 0, 0, 0)
OlctParams frft_params(double alpha);               // (cos a, sin a, -sin a, cos a, 0, 0)
OlctParams lct_params(double a, double b, double c, double d);
OlctParams fresnel_params(double z);                // (1, z, 0, 1, 0, 0)
OlctParams offset_ft_params(double u0, double w0);  // (0, 1, -1, 0, u0, w0)

// The inverse parameter tuple (d, -b, -c, a, b*w0 - d*u0, c*u0 - a*w0).
OlctParams inverse_params(const OlctParams& p);

} // namespace olct

#endif
