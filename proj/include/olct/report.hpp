#ifndef OLCT_REPORT_HPP
#define OLCT_REPORT_HPP

#include <map>
#include <string>

#include "olct/params.hpp"
#include "olct/signal.hpp"

namespace olct {

// Outcome of one named identity check. passed <=> rel_err <= tolerance.
struct VerificationReport {
    std::string name;
    double max_abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::map<std::string, std::string> details;
};

VerificationReport make_report(std::string name, double max_abs_err, double rel_err,
                               double tolerance,
                               std::map<std::string, std::string> details = {});

std::string format_double(double v);  // shortest round-trip decimal

// ||f||^2 vs ||O^M f||^2 (and <f,g> vs <O^M f, O^M g> for the pair overload).
VerificationReport verify_parseval(const OlctParams& p, const SampledSignal& f,
                                   double tolerance = 1e-6);
VerificationReport verify_parseval(const OlctParams& p, const SampledSignal& f,
                                   const SampledSignal& g, double tolerance = 1e-6);

// Spectral decay: max |F| over the outer edge_fraction of the u-grid vs peak.
VerificationReport verify_riemann_lebesgue(const OlctParams& p, const SampledSignal& f,
                                           double edge_fraction, double tolerance = 1e-3);

// Compares the printed inverse-parameter route (both constants) against the
// adjoint inverse and records the measured best-fit constant.
VerificationReport verify_inverse_tuple(const OlctParams& p, const SampledSignal& f,
                                        double tolerance = 1e-6);

} // namespace olct

#endif
