// pybind11 bindings for the OLCT toolkit: parameters, signals, transforms,
// convolution/correlation, spectral estimators, filtering, generators, and
// the verification runner.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "olct/convolution.hpp"
#include "olct/errors.hpp"
#include "olct/filter.hpp"
#include "olct/generate.hpp"
#include "olct/io.hpp"
#include "olct/spectral_ops.hpp"
#include "olct/transform.hpp"
#include "olct/verify.hpp"

namespace py = pybind11;
using namespace olct;

namespace {

py::array_t<std::complex<double>> to_numpy(const std::vector<cdouble>& v) {
    py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

std::vector<cdouble> from_numpy(const py::array_t<std::complex<double>>& a) {
    const auto buf = a.request();
    if (buf.ndim != 1) throw GridInvalid("samples must be a 1-d array");
    const auto* ptr = static_cast<const std::complex<double>*>(buf.ptr);
    return std::vector<cdouble>(ptr, ptr + buf.shape[0]);
}

GridSpec grid_from_tuple(const std::tuple<double, double, std::size_t>& t) {
    return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

} // namespace

PYBIND11_MODULE(_olct, m) {
    m.doc() = "offset linear canonical transform toolkit";

    py::register_exception<UnimodularityViolation>(m, "UnimodularityViolation");
    py::register_exception<DegenerateCase>(m, "DegenerateCase");
    py::register_exception<GridMismatch>(m, "GridMismatch");
    py::register_exception<GridInvalid>(m, "GridInvalid");
    py::register_exception<EdgeOutOfRange>(m, "EdgeOutOfRange");
    py::register_exception<ConfigInvalid>(m, "ConfigInvalid");

    py::class_<OlctParams>(m, "OlctParams")
        .def_readonly("a", &OlctParams::a)
        .def_readonly("b", &OlctParams::b)
        .def_readonly("c", &OlctParams::c)
        .def_readonly("d", &OlctParams::d)
        .def_readonly("u0", &OlctParams::u0)
        .def_readonly("w0", &OlctParams::w0)
        .def("main_branch", &OlctParams::main_branch)
        .def("__repr__", [](const OlctParams& p) {
            return "OlctParams(" + params_to_string(p) + ")";
        });

    m.def("make_params", &make_params, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
          py::arg("u0") = 0.0, py::arg("w0") = 0.0);
    m.def("ft_params", &ft_params);
    m.def("frft_params", &frft_params, py::arg("alpha"));
    m.def("lct_params", &lct_params);
    m.def("fresnel_params", &fresnel_params, py::arg("z"));
    m.def("offset_ft_params", &offset_ft_params, py::arg("u0"), py::arg("w0"));
    m.def("inverse_params", &inverse_params);

    py::class_<SampledSignal>(m, "SampledSignal")
        .def(py::init([](double x_start, double dx, py::array_t<std::complex<double>> samples) {
                 return SampledSignal(x_start, dx, from_numpy(samples));
             }),
             py::arg("x_start"), py::arg("dx"), py::arg("samples"))
        .def_readonly("x_start", &SampledSignal::x_start)
        .def_readonly("dx", &SampledSignal::dx)
        .def_property_readonly(
            "samples", [](const SampledSignal& s) { return to_numpy(s.samples); })
        .def("__len__", &SampledSignal::size)
        .def_property_readonly("x", [](const SampledSignal& s) {
            py::array_t<double> out(static_cast<py::ssize_t>(s.size()));
            for (std::size_t k = 0; k < s.size(); ++k) out.mutable_data()[k] = s.x(k);
            return out;
        });

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("u_start", &Spectrum::u_start)
        .def_readonly("du", &Spectrum::du)
        .def_readonly("params", &Spectrum::params)
        .def_property_readonly("samples",
                               [](const Spectrum& s) { return to_numpy(s.samples); })
        .def("__len__", &Spectrum::size)
        .def_property_readonly("u", [](const Spectrum& s) {
            py::array_t<double> out(static_cast<py::ssize_t>(s.size()));
            for (std::size_t j = 0; j < s.size(); ++j) out.mutable_data()[j] = s.u(j);
            return out;
        });

    py::enum_<Quadrature>(m, "Quadrature")
        .value("trapezoid", Quadrature::trapezoid)
        .value("rectangle", Quadrature::rectangle);

    m.def("kernel", &kernel, py::arg("params"), py::arg("u"), py::arg("x"));
    m.def("olct_fast", &olct_fast, py::arg("params"), py::arg("signal"),
          py::arg("quadrature") = Quadrature::trapezoid);
    m.def(
        "olct_direct",
        [](const OlctParams& p, const SampledSignal& f,
           const std::tuple<double, double, std::size_t>& u_grid, Quadrature q) {
            return olct_direct(p, f, grid_from_tuple(u_grid), q);
        },
        py::arg("params"), py::arg("signal"), py::arg("u_grid"),
        py::arg("quadrature") = Quadrature::trapezoid);
    m.def("olct_inverse", &olct_inverse, py::arg("spectrum"),
          py::arg("quadrature") = Quadrature::trapezoid);
    m.def("olct_b_zero", &olct_b_zero, py::arg("params"), py::arg("signal"));
    m.def("fast_u_grid", [](const OlctParams& p, std::size_t n, double dx) {
        const GridSpec g = fast_u_grid(p, n, dx);
        return std::make_tuple(g.start, g.step, g.n);
    });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("name", &VerificationReport::name)
        .def_readonly("max_abs_err", &VerificationReport::max_abs_err)
        .def_readonly("rel_err", &VerificationReport::rel_err)
        .def_readonly("tolerance", &VerificationReport::tolerance)
        .def_readonly("passed", &VerificationReport::passed)
        .def_readonly("details", &VerificationReport::details)
        .def("__repr__", [](const VerificationReport& r) {
            return "VerificationReport(" + r.name + (r.passed ? ", passed" : ", FAILED") +
                   ", rel_err=" + format_double(r.rel_err) + ")";
        });

    m.def("verify_parseval",
          py::overload_cast<const OlctParams&, const SampledSignal&, double>(&verify_parseval),
          py::arg("params"), py::arg("signal"), py::arg("tolerance") = 1e-6);
    m.def("verify_riemann_lebesgue", &verify_riemann_lebesgue, py::arg("params"),
          py::arg("signal"), py::arg("edge_fraction"), py::arg("tolerance") = 1e-3);
    m.def("verify_inverse_tuple", &verify_inverse_tuple, py::arg("params"), py::arg("signal"),
          py::arg("tolerance") = 1e-6);

    py::enum_<ConvBracket>(m, "ConvBracket")
        .value("separable", ConvBracket::separable)
        .value("as_printed", ConvBracket::as_printed);
    py::enum_<ChirpVariant>(m, "ChirpVariant")
        .value("product", ChirpVariant::product)
        .value("as_printed", ChirpVariant::as_printed);
    py::enum_<CorrExponent>(m, "CorrExponent")
        .value("proof_consistent", CorrExponent::proof_consistent)
        .value("as_printed", CorrExponent::as_printed);

    m.def("chirp_T", &chirp_T, py::arg("params"), py::arg("u"),
          py::arg("variant") = ChirpVariant::product);
    m.def("convolve_time", &convolve_time, py::arg("params"), py::arg("f"), py::arg("g"),
          py::arg("bracket") = ConvBracket::separable);
    m.def("convolve_spectral", &convolve_spectral, py::arg("params"), py::arg("f"),
          py::arg("g"));
    m.def("correlate", &correlate, py::arg("params"), py::arg("f"), py::arg("g"),
          py::arg("variant") = CorrExponent::proof_consistent);
    m.def("verify_convolution_theorem", &verify_convolution_theorem, py::arg("params"),
          py::arg("f"), py::arg("g"), py::arg("tolerance") = 1e-6);
    m.def("verify_l1_bound", &verify_l1_bound, py::arg("params"), py::arg("f"), py::arg("g"));
    m.def("verify_correlation_theorem", &verify_correlation_theorem, py::arg("params"),
          py::arg("f"), py::arg("g"), py::arg("tolerance") = 1e-6);

    py::enum_<DerivScheme>(m, "DerivScheme")
        .value("spectral", DerivScheme::spectral)
        .value("finite_difference", DerivScheme::finite_difference);
    py::enum_<EstimateMethod>(m, "EstimateMethod")
        .value("last_value", EstimateMethod::last_value)
        .value("richardson", EstimateMethod::richardson)
        .value("root_fit", EstimateMethod::root_fit);

    py::class_<OperatorSequence>(m, "OperatorSequence")
        .def_readonly("norms", &OperatorSequence::norms)
        .def_readonly("roots", &OperatorSequence::roots)
        .def_readonly("estimate", &OperatorSequence::estimate)
        .def_readonly("gamma_direct", &OperatorSequence::gamma_direct)
        .def_readonly("degenerate", &OperatorSequence::degenerate)
        .def_readonly("n_effective", &OperatorSequence::n_effective);

    m.def("delta_op", &delta_op, py::arg("params"), py::arg("signal"),
          py::arg("scheme") = DerivScheme::spectral);
    m.def("delta_op_n", &delta_op_n, py::arg("params"), py::arg("signal"), py::arg("n"),
          py::arg("scheme") = DerivScheme::spectral);
    m.def("boas_op", &boas_op, py::arg("params"), py::arg("signal"));
    m.def("pw_bandwidth_estimate", &pw_bandwidth_estimate, py::arg("params"), py::arg("signal"),
          py::arg("n_max"), py::arg("method") = EstimateMethod::richardson);
    m.def("boas_highpass_estimate", &boas_highpass_estimate, py::arg("params"),
          py::arg("signal"), py::arg("n_max"), py::arg("method") = EstimateMethod::richardson);
    m.def("verify_delta_relation", &verify_delta_relation, py::arg("params"), py::arg("signal"),
          py::arg("n"), py::arg("tolerance"));
    m.def("verify_boas_relation", &verify_boas_relation, py::arg("params"), py::arg("signal"),
          py::arg("n"), py::arg("tolerance"), py::arg("u_exclusion") = 0.5);

    py::class_<FilterSpec> fs(m, "FilterSpec");
    py::enum_<FilterSpec::Kind>(fs, "Kind")
        .value("low_pass", FilterSpec::Kind::low_pass)
        .value("band_pass", FilterSpec::Kind::band_pass)
        .value("high_pass", FilterSpec::Kind::high_pass);
    fs.def(py::init([](FilterSpec::Kind kind, double edge1, double edge2, double rolloff) {
               FilterSpec s;
               s.kind = kind;
               s.edge1 = edge1;
               s.edge2 = edge2;
               s.rolloff = rolloff;
               return s;
           }),
           py::arg("kind"), py::arg("edge1"), py::arg("edge2") = 0.0, py::arg("rolloff") = 0.0)
        .def_readwrite("kind", &FilterSpec::kind)
        .def_readwrite("edge1", &FilterSpec::edge1)
        .def_readwrite("edge2", &FilterSpec::edge2)
        .def_readwrite("rolloff", &FilterSpec::rolloff);

    m.def(
        "design_mask",
        [](const FilterSpec& spec, const std::tuple<double, double, std::size_t>& grid) {
            return design_mask(spec, grid_from_tuple(grid));
        },
        py::arg("spec"), py::arg("u_grid"));
    m.def("apply_filter",
          py::overload_cast<const OlctParams&, const SampledSignal&, const std::vector<double>&>(
              &apply_filter),
          py::arg("params"), py::arg("signal"), py::arg("mask"));
    m.def(
        "apply_filter_complex",
        [](const OlctParams& p, const SampledSignal& f,
           const py::array_t<std::complex<double>>& mask) {
            return apply_filter(p, f, from_numpy(mask));
        },
        py::arg("params"), py::arg("signal"), py::arg("mask"));
    m.def(
        "mask_from_prototype",
        [](const OlctParams& p, const SampledSignal& g) {
            return to_numpy(mask_from_prototype(p, g));
        },
        py::arg("params"), py::arg("prototype"));
    m.def("snr_db", &snr_db, py::arg("clean"), py::arg("test"));

    py::class_<SnrReport>(m, "SnrReport")
        .def_readonly("snr_in_db", &SnrReport::snr_in_db)
        .def_readonly("snr_out_db", &SnrReport::snr_out_db)
        .def_readonly("gain_db", &SnrReport::gain_db);

    py::class_<DenoiseConfig>(m, "DenoiseConfig")
        .def(py::init<>())
        .def_readwrite("params", &DenoiseConfig::params)
        .def_property(
            "grid",
            [](const DenoiseConfig& c) {
                return std::make_tuple(c.grid.start, c.grid.step, c.grid.n);
            },
            [](DenoiseConfig& c, const std::tuple<double, double, std::size_t>& t) {
                c.grid = grid_from_tuple(t);
            })
        .def_readwrite("chirp_rate", &DenoiseConfig::chirp_rate)
        .def_readwrite("center_freq", &DenoiseConfig::center_freq)
        .def_readwrite("envelope_width", &DenoiseConfig::envelope_width)
        .def_readwrite("interference_offset", &DenoiseConfig::interference_offset)
        .def_readwrite("interference_level", &DenoiseConfig::interference_level)
        .def_readwrite("noise_level_db", &DenoiseConfig::noise_level_db)
        .def_readwrite("seed", &DenoiseConfig::seed)
        .def_readwrite("band_threshold", &DenoiseConfig::band_threshold)
        .def_readwrite("rolloff", &DenoiseConfig::rolloff);

    py::class_<DenoiseResult>(m, "DenoiseResult")
        .def_readonly("snr", &DenoiseResult::snr)
        .def_readonly("clean", &DenoiseResult::clean)
        .def_readonly("received", &DenoiseResult::received)
        .def_readonly("output", &DenoiseResult::output)
        .def_readonly("band_lo", &DenoiseResult::band_lo)
        .def_readonly("band_hi", &DenoiseResult::band_hi);

    m.def("demo_chirp_denoise", &demo_chirp_denoise, py::arg("config") = DenoiseConfig{});

    using PyGrid = std::tuple<double, double, std::size_t>;
    m.def(
        "gen_gaussian",
        [](const PyGrid& g, double c, double w) {
            return gen_gaussian(grid_from_tuple(g), c, w);
        },
        py::arg("grid"), py::arg("center"), py::arg("width"));
    m.def(
        "gen_lfm_chirp",
        [](const PyGrid& g, double r, double cf, double ew) {
            return gen_lfm_chirp(grid_from_tuple(g), r, cf, ew);
        },
        py::arg("grid"), py::arg("rate"), py::arg("center_freq"), py::arg("envelope_width"));
    m.def(
        "gen_rect",
        [](const PyGrid& g, double lo, double hi) { return gen_rect(grid_from_tuple(g), lo, hi); },
        py::arg("grid"), py::arg("lo"), py::arg("hi"));
    m.def(
        "gen_tone", [](const PyGrid& g, double f) { return gen_tone(grid_from_tuple(g), f); },
        py::arg("grid"), py::arg("freq"));
    m.def(
        "gen_olct_bandlimited",
        [](const OlctParams& p, const std::tuple<double, double, std::size_t>& grid,
           double u_lo, double u_hi, double smooth) {
            return gen_olct_bandlimited(p, grid_from_tuple(grid), u_lo, u_hi, smooth);
        },
        py::arg("params"), py::arg("grid"), py::arg("u_lo"), py::arg("u_hi"),
        py::arg("smooth"));
    m.def(
        "gen_olct_highpass",
        [](const OlctParams& p, const std::tuple<double, double, std::size_t>& grid,
           double u_lo, double u_hi, double smooth) {
            return gen_olct_highpass(p, grid_from_tuple(grid), u_lo, u_hi, smooth);
        },
        py::arg("params"), py::arg("grid"), py::arg("u_lo"), py::arg("u_hi"),
        py::arg("smooth"));
    m.def(
        "gen_noise",
        [](const PyGrid& g, std::uint64_t s, double lv) {
            return gen_noise(grid_from_tuple(g), s, lv);
        },
        py::arg("grid"), py::arg("seed"), py::arg("level"));
    m.def(
        "gen_random_smooth",
        [](const PyGrid& g, std::uint64_t s, double bw, double ew) {
            return gen_random_smooth(grid_from_tuple(g), s, bw, ew);
        },
        py::arg("grid"), py::arg("seed"), py::arg("bandwidth_fraction") = 0.25,
        py::arg("envelope_width") = 0.0);

    m.def("write_signal", &write_signal, py::arg("path"), py::arg("signal"));
    m.def("write_spectrum", &write_spectrum, py::arg("path"), py::arg("spectrum"));
    m.def("read_signal", &read_signal, py::arg("path"));
    m.def("read_spectrum", &read_spectrum, py::arg("path"));

    m.def(
        "verify_suite_json",
        [](std::uint64_t seed) {
            VerifyOptions opt = default_verify_options();
            opt.seed = seed;
            return suite_to_json(run_verification_suite(opt), opt);
        },
        py::arg("seed") = 1,
        "Run the full identity-verification suite; returns the JSON report.");
}
