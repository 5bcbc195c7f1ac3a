#ifndef OLCT_IO_HPP
#define OLCT_IO_HPP

#include <map>
#include <set>
#include <string>
#include <variant>

#include "olct/params.hpp"
#include "olct/signal.hpp"

namespace olct {

/*
 * CSV with `# key=value` header lines and `x,re,im` data rows. All numbers
 * use shortest round-trip decimals, so parse(serialize(s)) == s bit-exactly
 * for finite values. Spectrum files additionally carry params and the origin
 * grid.
 */
void write_signal(const std::string& path, const SampledSignal& s);
void write_spectrum(const std::string& path, const Spectrum& s);

using SignalOrSpectrum = std::variant<SampledSignal, Spectrum>;
SignalOrSpectrum read_signal_file(const std::string& path);

SampledSignal read_signal(const std::string& path);   // HeaderMismatch if kind=spectrum
Spectrum read_spectrum(const std::string& path);

// Flat key=value configuration ('#' comments allowed). Unknown keys are
// rejected against the allowed set.
std::map<std::string, std::string> read_config(const std::string& path,
                                               const std::set<std::string>& allowed_keys);

double parse_double(const std::string& s);             // ParseError on failure
OlctParams parse_params_list(const std::string& csv);  // "a,b,c,d,u0,w0"
std::string params_to_string(const OlctParams& p);

} // namespace olct

#endif
