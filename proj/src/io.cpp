#include "olct/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "olct/errors.hpp"
#include "olct/report.hpp"

namespace olct {

namespace {

std::string fmt(double v) { return format_double(v); }

double from_chars_strict(std::string_view sv, std::size_t line) {
    double v = 0.0;
    const char* first = sv.data();
    const char* last = sv.data() + sv.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw ParseError("malformed number '" + std::string(sv) + "'", line);
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

struct ParsedFile {
    std::map<std::string, std::string> header;
    std::vector<cdouble> rows;
};

ParsedFile parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);

    ParsedFile pf;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string body = line.substr(1);
            const std::size_t eq = body.find('=');
            if (eq == std::string::npos) continue;  // plain comment
            std::string key = body.substr(0, eq);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            pf.header[key] = body.substr(eq + 1);
            continue;
        }
        const auto parts = split(line, ',');
        if (parts.size() != 3) throw ParseError("expected 3 columns", lineno);
        const double re = from_chars_strict(parts[1], lineno);
        const double im = from_chars_strict(parts[2], lineno);
        pf.rows.emplace_back(re, im);
    }
    return pf;
}

std::size_t header_count(const ParsedFile& pf) {
    const auto it = pf.header.find("n");
    if (it == pf.header.end()) throw HeaderMismatch("missing n header");
    return static_cast<std::size_t>(std::stoull(it->second));
}

double header_double(const ParsedFile& pf, const std::string& key) {
    const auto it = pf.header.find(key);
    if (it == pf.header.end()) throw HeaderMismatch("missing " + key + " header");
    return from_chars_strict(it->second, 0);
}

} // namespace

void write_signal(const std::string& path, const SampledSignal& s) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'", 0);
    out << "# kind=signal\n";
    out << "# x_start=" << fmt(s.x_start) << "\n";
    out << "# dx=" << fmt(s.dx) << "\n";
    out << "# n=" << s.size() << "\n";
    for (std::size_t k = 0; k < s.size(); ++k) {
        out << fmt(s.x(k)) << ',' << fmt(s.samples[k].real()) << ',' << fmt(s.samples[k].imag())
            << "\n";
    }
}

void write_spectrum(const std::string& path, const Spectrum& s) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'", 0);
    out << "# kind=spectrum\n";
    out << "# x_start=" << fmt(s.u_start) << "\n";
    out << "# dx=" << fmt(s.du) << "\n";
    out << "# n=" << s.size() << "\n";
    out << "# params=" << params_to_string(s.params) << "\n";
    out << "# origin_x_start=" << fmt(s.origin_x_start) << "\n";
    out << "# origin_dx=" << fmt(s.origin_dx) << "\n";
    for (std::size_t j = 0; j < s.size(); ++j) {
        out << fmt(s.u(j)) << ',' << fmt(s.samples[j].real()) << ',' << fmt(s.samples[j].imag())
            << "\n";
    }
}

SignalOrSpectrum read_signal_file(const std::string& path) {
    const ParsedFile pf = parse_file(path);
    const std::size_t n = header_count(pf);
    if (n != pf.rows.size()) {
        throw HeaderMismatch("header n=" + std::to_string(n) + " but file has " +
                             std::to_string(pf.rows.size()) + " rows");
    }
    const double start = header_double(pf, "x_start");
    const double step = header_double(pf, "dx");
    const auto kind_it = pf.header.find("kind");
    const std::string kind = kind_it == pf.header.end() ? "signal" : kind_it->second;

    if (kind == "spectrum") {
        const auto pit = pf.header.find("params");
        if (pit == pf.header.end()) throw HeaderMismatch("spectrum file missing params header");
        Spectrum s(start, step, pf.rows, parse_params_list(pit->second));
        if (pf.header.count("origin_x_start")) {
            s.origin_x_start = header_double(pf, "origin_x_start");
        }
        if (pf.header.count("origin_dx")) s.origin_dx = header_double(pf, "origin_dx");
        return s;
    }
    return SampledSignal(start, step, pf.rows);
}

SampledSignal read_signal(const std::string& path) {
    auto v = read_signal_file(path);
    if (std::holds_alternative<SampledSignal>(v)) return std::get<SampledSignal>(v);
    throw HeaderMismatch("expected a signal file, got a spectrum: " + path);
}

Spectrum read_spectrum(const std::string& path) {
    auto v = read_signal_file(path);
    if (std::holds_alternative<Spectrum>(v)) return std::get<Spectrum>(v);
    throw HeaderMismatch("expected a spectrum file, got a signal: " + path);
}

std::map<std::string, std::string> read_config(const std::string& path,
                                               const std::set<std::string>& allowed_keys) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open config '" + path + "'");
    std::map<std::string, std::string> cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigInvalid("config line " + std::to_string(lineno) + ": expected key=value");
        }
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        if (!allowed_keys.count(key)) {
            throw ConfigInvalid("config line " + std::to_string(lineno) + ": unknown key '" +
                                key + "'");
        }
        cfg[key] = line.substr(eq + 1);
    }
    return cfg;
}

double parse_double(const std::string& s) { return from_chars_strict(s, 0); }

OlctParams parse_params_list(const std::string& csv) {
    const auto parts = split(csv, ',');
    if (parts.size() != 6) {
        throw ParseError("params need 6 comma-separated values, got " +
                         std::to_string(parts.size()), 0);
    }
    double v[6];
    for (int i = 0; i < 6; ++i) v[i] = from_chars_strict(parts[static_cast<std::size_t>(i)], 0);
    return make_params(v[0], v[1], v[2], v[3], v[4], v[5]);
}

std::string params_to_string(const OlctParams& p) {
    std::ostringstream out;
    out << fmt(p.a) << ',' << fmt(p.b) << ',' << fmt(p.c) << ',' << fmt(p.d) << ',' << fmt(p.u0)
        << ',' << fmt(p.w0);
    return out.str();
}

} // namespace olct
