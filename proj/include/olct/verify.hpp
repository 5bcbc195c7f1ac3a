#ifndef OLCT_VERIFY_HPP
#define OLCT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "olct/params.hpp"
#include "olct/report.hpp"

namespace olct {

/*
 * The aggregated identity-verification runner behind `olct verify`: Parseval,
 * Riemann-Lebesgue, the convolution theorem and L1 bound, the correlation
 * four-way check, the Delta eigen-relation (n = 1..4), the Boas relation
 * (n = 1..2), and the inverse-tuple comparison, over a parameter sweep.
 */
struct VerifyOptions {
    std::vector<std::pair<std::string, OlctParams>> sweep;
    std::uint64_t seed = 1;
    std::map<std::string, double> tolerance_overrides;  // keyed by check name
};

VerifyOptions default_verify_options();

struct SuiteResult {
    std::vector<VerificationReport> reports;
    std::map<std::string, double> effective_tolerances;
    bool all_passed = false;
};

SuiteResult run_verification_suite(const VerifyOptions& options);

std::string suite_to_json(const SuiteResult& result, const VerifyOptions& options);

} // namespace olct

#endif
