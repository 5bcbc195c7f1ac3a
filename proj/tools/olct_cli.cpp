// Command-line front end: transforms, convolution/correlation, filtering,
// band-limit estimators, signal generation, and the identity-verification
// runner. Exit codes: 0 success, 1 failed verification, 2 usage/config error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "olct/convolution.hpp"
#include "olct/errors.hpp"
#include "olct/filter.hpp"
#include "olct/generate.hpp"
#include "olct/io.hpp"
#include "olct/spectral_ops.hpp"
#include "olct/transform.hpp"
#include "olct/verify.hpp"

namespace {

using namespace olct;

GridSpec parse_grid(const std::string& s) {
    const auto c1 = s.find(',');
    const auto c2 = s.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw ConfigInvalid("grid must be start,step,n");
    }
    GridSpec g;
    g.start = parse_double(s.substr(0, c1));
    g.step = parse_double(s.substr(c1 + 1, c2 - c1 - 1));
    g.n = static_cast<std::size_t>(std::stoull(s.substr(c2 + 1)));
    return g;
}

std::uint64_t seed_with_env(std::uint64_t seed) {
    if (const char* env = std::getenv("OLCT_SEED")) {
        return std::stoull(env);
    }
    return seed;
}

void print_sequence(const OperatorSequence& seq, const std::string& what) {
    if (seq.degenerate) {
        std::cout << what << ": degenerate (zero) input\n";
        return;
    }
    std::cout << "n, norm, root\n";
    for (std::size_t i = 0; i < seq.norms.size(); ++i) {
        std::cout << (i + 1) << ", " << format_double(seq.norms[i]) << ", "
                  << format_double(seq.roots[i]) << "\n";
    }
    std::cout << what << " estimate: " << format_double(seq.estimate) << "\n";
    std::cout << "direct support measurement: " << format_double(seq.gamma_direct) << "\n";
}

void write_sequence_json(const std::string& path, const OperatorSequence& seq) {
    nlohmann::json j;
    j["norms"] = seq.norms;
    j["roots"] = seq.roots;
    j["estimate"] = seq.estimate;
    j["gamma_direct"] = seq.gamma_direct;
    j["n_effective"] = seq.n_effective;
    j["degenerate"] = seq.degenerate;
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"offset linear canonical transform toolkit"};
    app.require_subcommand(1);

    std::string params_str, in_path, in2_path, out_path, method, variant, kind_str;
    std::string edges_str, grid_str, args_str, config_path;
    double rolloff = -1.0;
    double edge_fraction = 0.05;
    unsigned nmax = 16;
    std::uint64_t seed = 1;
    std::vector<std::string> tol_overrides;

    auto* t = app.add_subcommand("transform", "forward OLCT of a signal file");
    t->add_option("--params", params_str, "a,b,c,d,u0,w0")->required();
    t->add_option("--in", in_path)->required();
    t->add_option("--out", out_path, "output spectrum (b = 0: output signal)");
    t->add_option("--method", method, "fast|direct (default fast)");

    auto* inv = app.add_subcommand("inverse", "inverse OLCT of a spectrum file");
    inv->add_option("--in", in_path)->required();
    inv->add_option("--out", out_path);

    auto* conv = app.add_subcommand("convolve", "OLCT convolution of two signals");
    conv->add_option("--params", params_str)->required();
    conv->add_option("--in1", in_path)->required();
    conv->add_option("--in2", in2_path)->required();
    conv->add_option("--out", out_path);
    conv->add_option("--method", method, "time|spectral (default spectral)");
    conv->add_option("--bracket", variant, "separable|as-printed (time method)");

    auto* corr = app.add_subcommand("correlate", "OLCT correlation of two signals");
    corr->add_option("--params", params_str)->required();
    corr->add_option("--in1", in_path)->required();
    corr->add_option("--in2", in2_path)->required();
    corr->add_option("--out", out_path);
    corr->add_option("--variant", variant, "as-printed|proof (default proof)");

    auto* fil = app.add_subcommand("filter", "multiplicative filter in the OLCT domain");
    fil->add_option("--params", params_str)->required();
    fil->add_option("--in", in_path)->required();
    fil->add_option("--out", out_path);
    fil->add_option("--kind", kind_str, "low|band|high")->required();
    fil->add_option("--edges", edges_str, "e or e1,e2")->required();
    fil->add_option("--rolloff", rolloff, "transition half-width (default 2*du)");

    auto* pw = app.add_subcommand("pw-estimate", "band-limit estimate from Delta-operator norms");
    pw->add_option("--params", params_str)->required();
    pw->add_option("--in", in_path)->required();
    pw->add_option("--nmax", nmax);
    pw->add_option("--out", out_path, "JSON output");

    auto* bo = app.add_subcommand("boas-estimate", "high-pass estimate from B-operator norms");
    bo->add_option("--params", params_str)->required();
    bo->add_option("--in", in_path)->required();
    bo->add_option("--nmax", nmax);
    bo->add_option("--out", out_path, "JSON output");

    auto* ver = app.add_subcommand("verify", "run the full identity-verification suite");
    ver->add_option("--params", params_str, "single parameter set (default: built-in sweep)");
    ver->add_option("--seed", seed);
    ver->add_option("--out", out_path, "JSON report path");
    ver->add_option("--tol", tol_overrides, "name=value tolerance override")->take_all();
    ver->add_option("--edge-fraction", edge_fraction);

    auto* dem = app.add_subcommand("demo", "demonstrations");
    auto* dem_cd = dem->add_subcommand("chirp-denoise", "matched-chirp band-pass denoising");
    dem_cd->add_option("--config", config_path, "key=value config file");
    dem_cd->add_option("--seed", seed);
    dem_cd->add_option("--out", out_path, "output file prefix");

    auto* gen = app.add_subcommand("generate", "write a test signal");
    gen->add_option("--kind", kind_str,
                    "gaussian|lfm_chirp|rect|tone|olct_bandlimited|olct_highpass|noise|"
                    "random_smooth")
        ->required();
    gen->add_option("--grid", grid_str, "start,step,n")->required();
    gen->add_option("--args", args_str, "comma-separated shape arguments");
    gen->add_option("--params", params_str, "needed by olct_* kinds");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (t->parsed()) {
        const OlctParams p = parse_params_list(params_str);
        const SampledSignal f = read_signal(in_path);
        if (!p.main_branch()) {
            const SampledSignal out = olct_b_zero(p, f);
            if (!out_path.empty()) write_signal(out_path, out);
            std::cout << "b = 0 branch; output grid starts at " << format_double(out.x_start)
                      << "\n";
            return 0;
        }
        const Spectrum F = method == "direct"
                               ? olct_direct(p, f, fast_u_grid(p, f.size(), f.dx))
                               : olct_fast(p, f);
        if (!out_path.empty()) write_spectrum(out_path, F);
        std::cout << "spectrum: n=" << F.size() << " du=" << format_double(F.du)
                  << " l2=" << format_double(l2_norm(F)) << "\n";
        return 0;
    }

    if (inv->parsed()) {
        const Spectrum F = read_spectrum(in_path);
        const SampledSignal f = olct_inverse(F);
        if (!out_path.empty()) write_signal(out_path, f);
        std::cout << "signal: n=" << f.size() << " dx=" << format_double(f.dx)
                  << " l2=" << format_double(l2_norm(f)) << "\n";
        return 0;
    }

    if (conv->parsed()) {
        const OlctParams p = parse_params_list(params_str);
        const SampledSignal f = read_signal(in_path);
        const SampledSignal g = read_signal(in2_path);
        SampledSignal out =
            method == "time"
                ? convolve_time(p, f, g,
                                variant == "as-printed" ? ConvBracket::as_printed
                                                        : ConvBracket::separable)
                : convolve_spectral(p, f, g);
        if (!out_path.empty()) write_signal(out_path, out);
        std::cout << "convolution l2=" << format_double(l2_norm(out)) << "\n";
        return 0;
    }

    if (corr->parsed()) {
        const OlctParams p = parse_params_list(params_str);
        const SampledSignal f = read_signal(in_path);
        const SampledSignal g = read_signal(in2_path);
        const SampledSignal out = correlate(
            p, f, g,
            variant == "as-printed" ? CorrExponent::as_printed : CorrExponent::proof_consistent);
        if (!out_path.empty()) write_signal(out_path, out);
        std::cout << "correlation l2=" << format_double(l2_norm(out)) << "\n";
        return 0;
    }

    if (fil->parsed()) {
        const OlctParams p = parse_params_list(params_str);
        const SampledSignal f = read_signal(in_path);
        const GridSpec ug = fast_u_grid(p, f.size(), f.dx);

        FilterSpec spec;
        if (kind_str == "low") spec.kind = FilterSpec::Kind::low_pass;
        else if (kind_str == "band") spec.kind = FilterSpec::Kind::band_pass;
        else if (kind_str == "high") spec.kind = FilterSpec::Kind::high_pass;
        else throw ConfigInvalid("filter kind must be low|band|high");

        const auto comma = edges_str.find(',');
        spec.edge1 = parse_double(edges_str.substr(0, comma));
        if (comma != std::string::npos) spec.edge2 = parse_double(edges_str.substr(comma + 1));
        else if (spec.kind == FilterSpec::Kind::band_pass)
            throw ConfigInvalid("band-pass needs two edges");
        spec.rolloff = rolloff >= 0.0 ? rolloff : 2.0 * ug.step;

        const SampledSignal out = apply_filter(p, f, design_mask(spec, ug));
        if (!out_path.empty()) write_signal(out_path, out);
        std::cout << "filtered l2=" << format_double(l2_norm(out)) << "\n";
        return 0;
    }

    if (pw->parsed() || bo->parsed()) {
        const OlctParams p = parse_params_list(params_str);
        const SampledSignal f = read_signal(in_path);
        const OperatorSequence seq = pw->parsed() ? pw_bandwidth_estimate(p, f, nmax)
                                                  : boas_highpass_estimate(p, f, nmax);
        print_sequence(seq, pw->parsed() ? "bandwidth" : "high-pass R");
        if (!out_path.empty()) write_sequence_json(out_path, seq);
        return 0;
    }

    if (ver->parsed()) {
        VerifyOptions opt = default_verify_options();
        opt.seed = seed_with_env(seed);
        if (!params_str.empty()) {
            opt.sweep = {{"custom", parse_params_list(params_str)}};
        }
        for (const auto& ov : tol_overrides) {
            const auto eq = ov.find('=');
            if (eq == std::string::npos) throw ConfigInvalid("--tol expects name=value");
            opt.tolerance_overrides[ov.substr(0, eq)] = parse_double(ov.substr(eq + 1));
        }
        const SuiteResult res = run_verification_suite(opt);
        for (const auto& r : res.reports) {
            std::printf("%-44s %s  rel_err=%.3e  tol=%.3e\n", r.name.c_str(),
                        r.passed ? "PASS" : "FAIL", r.rel_err, r.tolerance);
        }
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << suite_to_json(res, opt) << "\n";
        }
        std::cout << (res.all_passed ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
        return res.all_passed ? 0 : 1;
    }

    if (dem_cd->parsed()) {
        DenoiseConfig cfg;
        if (!config_path.empty()) {
            const auto kv = read_config(
                config_path,
                {"params", "x_start", "dx", "n", "chirp_rate", "center_freq", "envelope_width",
                 "interference_offset", "interference_level", "noise_level_db", "seed",
                 "band_threshold", "rolloff"});
            if (kv.count("params")) cfg.params = parse_params_list(kv.at("params"));
            if (kv.count("x_start")) cfg.grid.start = parse_double(kv.at("x_start"));
            if (kv.count("dx")) cfg.grid.step = parse_double(kv.at("dx"));
            if (kv.count("n")) cfg.grid.n = std::stoull(kv.at("n"));
            if (kv.count("chirp_rate")) cfg.chirp_rate = parse_double(kv.at("chirp_rate"));
            if (kv.count("center_freq")) cfg.center_freq = parse_double(kv.at("center_freq"));
            if (kv.count("envelope_width"))
                cfg.envelope_width = parse_double(kv.at("envelope_width"));
            if (kv.count("interference_offset"))
                cfg.interference_offset = parse_double(kv.at("interference_offset"));
            if (kv.count("interference_level"))
                cfg.interference_level = parse_double(kv.at("interference_level"));
            if (kv.count("noise_level_db"))
                cfg.noise_level_db = parse_double(kv.at("noise_level_db"));
            if (kv.count("seed")) cfg.seed = std::stoull(kv.at("seed"));
            if (kv.count("band_threshold"))
                cfg.band_threshold = parse_double(kv.at("band_threshold"));
            if (kv.count("rolloff")) cfg.rolloff = parse_double(kv.at("rolloff"));
        }
        if (dem_cd->count("--seed")) cfg.seed = seed;
        cfg.seed = seed_with_env(cfg.seed);

        const DenoiseResult r = demo_chirp_denoise(cfg);
        std::printf("occupied band: [%s, %s]\n", format_double(r.band_lo).c_str(),
                    format_double(r.band_hi).c_str());
        std::printf("snr_in  = %s dB\n", format_double(r.snr.snr_in_db).c_str());
        std::printf("snr_out = %s dB\n", format_double(r.snr.snr_out_db).c_str());
        std::printf("gain    = %s dB\n", format_double(r.snr.gain_db).c_str());
        if (!out_path.empty()) {
            write_signal(out_path + "_clean.csv", r.clean);
            write_signal(out_path + "_received.csv", r.received);
            write_signal(out_path + "_output.csv", r.output);
            write_spectrum(out_path + "_spectrum_in.csv", r.spectrum_in);
            write_spectrum(out_path + "_spectrum_filtered.csv", r.spectrum_filtered);
        }
        return 0;
    }

    if (gen->parsed()) {
        GeneratorSpec spec;
        spec.kind = kind_str;
        spec.grid = parse_grid(grid_str);
        spec.seed = seed_with_env(seed);
        if (!params_str.empty()) spec.params = parse_params_list(params_str);
        if (!args_str.empty()) {
            std::size_t pos = 0;
            while (pos != std::string::npos) {
                const auto next = args_str.find(',', pos);
                const auto piece = next == std::string::npos
                                       ? args_str.substr(pos)
                                       : args_str.substr(pos, next - pos);
                spec.args.push_back(parse_double(piece));
                pos = next == std::string::npos ? next : next + 1;
            }
        }
        write_signal(out_path, generate(spec));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const olct::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
