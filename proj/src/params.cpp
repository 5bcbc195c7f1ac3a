#include "olct/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "olct/errors.hpp"

namespace olct {

cdouble OlctParams::amplitude() const {
    // 1/(2*pi*i*b) in polar form, principal square root.
    return std::sqrt(1.0 / (2.0 * std::numbers::pi * cdouble(0.0, 1.0) * b));
}

cdouble OlctParams::offset_prefactor() const {
    return std::exp(cdouble(0.0, d * u0 * u0 / (2.0 * b)));
}

OlctParams make_params(double a, double b, double c, double d, double u0, double w0) {
    const double det = a * d - b * c;
    if (std::abs(det - 1.0) > kUnimodularityTol) {
        std::ostringstream msg;
        msg << "parameters violate ad - bc = 1 (det = " << det << ")";
        throw UnimodularityViolation(msg.str());
    }
    return OlctParams{a, b, c, d, u0, w0};
}

OlctParams ft_params() {
    return make_params(0.0, 1.0, -1.0, 0.0, 0.0, 0.0);
}

OlctParams frft_params(double alpha) {
    const double s = std::sin(alpha);
    if (std::abs(s) <= kBranchThreshold) {
        throw DegenerateCase("frft_params: alpha is a multiple of pi (b = 0)");
    }
    const double co = std::cos(alpha);
    return make_params(co, s, -s, co, 0.0, 0.0);
}

OlctParams lct_params(double a, double b, double c, double d) {
    return make_params(a, b, c, d, 0.0, 0.0);
}

OlctParams fresnel_params(double z) {
    if (std::abs(z) <= kBranchThreshold) {
        throw DegenerateCase("fresnel_params: z = 0 yields the identity (b = 0)");
    }
    return make_params(1.0, z, 0.0, 1.0, 0.0, 0.0);
}

OlctParams offset_ft_params(double u0, double w0) {
    return make_params(0.0, 1.0, -1.0, 0.0, u0, w0);
}

OlctParams inverse_params(const OlctParams& p) {
    return make_params(p.d, -p.b, -p.c, p.a, p.b * p.w0 - p.d * p.u0, p.c * p.u0 - p.a * p.w0);
}

} // namespace olct
