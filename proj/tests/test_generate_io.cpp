#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "olct/generate.hpp"
#include "olct/io.hpp"
#include "olct/transform.hpp"

using namespace olct;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/olct_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("gaussian generator: unit peak and analytic energy") {
    const GridSpec g{-12.0, 24.0 / 2048.0, 2048};
    const SampledSignal f = gen_gaussian(g, 0.0, 1.5);
    CHECK(std::abs(f.samples[g.n / 2] - cdouble(1.0, 0.0)) < 1e-12);  // x = 0 on-grid
    const double e = l2_norm(f) * l2_norm(f);
    CHECK(e == doctest::Approx(1.5 * std::sqrt(std::numbers::pi)).epsilon(1e-6));
}

TEST_CASE("band-limited fixture support lands in [u_hi, u_hi + smooth]") {
    // Long window: du ~ 0.025 resolves the 0.1-wide transition.
    const GridSpec g{-128.0, 256.0 / 8192.0, 8192};
    const SampledSignal f = gen_olct_bandlimited(ft_params(), g, -2.0, 2.0, 0.1);
    const Spectrum F = olct_fast(ft_params(), f, Quadrature::rectangle);
    const double peak = max_abs(F.samples);
    double sup = 0.0;
    for (std::size_t j = 0; j < F.size(); ++j) {
        if (std::abs(F.samples[j]) > 1e-6 * peak) sup = std::max(sup, std::abs(F.u(j)));
    }
    CHECK(sup >= 2.0);
    CHECK(sup <= 2.15);
}

TEST_CASE("noise generator: determinism and seed independence") {
    const GridSpec g{-16.0, 32.0 / 4096.0, 4096};
    const SampledSignal a = gen_noise(g, 42, 0.5);
    const SampledSignal b = gen_noise(g, 42, 0.5);
    for (std::size_t k = 0; k < g.n; ++k) {
        CHECK(a.samples[k] == b.samples[k]);  // bit-identical
    }

    const SampledSignal c = gen_noise(g, 43, 0.5);
    cdouble corr = 0.0;
    double na = 0.0, nc = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
        corr += a.samples[k] * std::conj(c.samples[k]);
        na += std::norm(a.samples[k]);
        nc += std::norm(c.samples[k]);
    }
    CHECK(std::abs(corr) / std::sqrt(na * nc) < 0.1);

    // RMS level: E|z|^2 = level^2.
    CHECK(std::sqrt(na / static_cast<double>(g.n)) == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("generator dispatcher") {
    GeneratorSpec spec;
    spec.kind = "gaussian";
    spec.args = {0.0, 1.0};
    CHECK_NOTHROW(generate(spec));
    spec.kind = "does_not_exist";
    CHECK_THROWS_AS(generate(spec), ConfigInvalid);
    spec.kind = "gaussian";
    spec.args = {0.0};
    CHECK_THROWS_AS(generate(spec), ConfigInvalid);
}

TEST_CASE("signal CSV round trip is bit-exact") {
    const GridSpec g{-8.0, 16.0 / 256.0, 256};
    SampledSignal f = gen_noise(g, 7, 1.0);
    // Exercise extreme magnitudes too.
    f.samples[0] = cdouble(1e-300, -1e300);
    f.samples[1] = cdouble(3.141592653589793e-17, 0.0);

    TempFile tmp("roundtrip.csv");
    write_signal(tmp.path, f);
    const SampledSignal back = read_signal(tmp.path);
    CHECK(back.x_start == f.x_start);
    CHECK(back.dx == f.dx);
    REQUIRE(back.size() == f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        CHECK(back.samples[k].real() == f.samples[k].real());
        CHECK(back.samples[k].imag() == f.samples[k].imag());
    }
}

TEST_CASE("spectrum CSV carries params and origin exactly") {
    const GridSpec g{-8.0, 16.0 / 256.0, 256};
    const OlctParams p = make_params(1, 1, 1, 2, 1, 0);
    const Spectrum F = olct_fast(p, gen_gaussian(g, 0.0, 1.0));

    TempFile tmp("spectrum.csv");
    write_spectrum(tmp.path, F);
    const Spectrum back = read_spectrum(tmp.path);
    CHECK(back.params.a == p.a);
    CHECK(back.params.u0 == p.u0);
    CHECK(back.u_start == F.u_start);
    CHECK(back.du == F.du);
    CHECK(back.origin_x_start == F.origin_x_start);
    CHECK(back.origin_dx == F.origin_dx);
    for (std::size_t j = 0; j < F.size(); ++j) {
        CHECK(back.samples[j] == F.samples[j]);
    }
    CHECK_THROWS_AS(read_signal(tmp.path), HeaderMismatch);
}

TEST_CASE("header row-count mismatch is detected") {
    TempFile tmp("mismatch.csv");
    {
        std::ofstream out(tmp.path);
        out << "# kind=signal\n# x_start=0\n# dx=1\n# n=100\n";
        for (int i = 0; i < 99; ++i) out << i << ",1,0\n";
    }
    CHECK_THROWS_AS(read_signal(tmp.path), HeaderMismatch);
}

TEST_CASE("malformed rows raise ParseError with a line number") {
    TempFile tmp("bad.csv");
    {
        std::ofstream out(tmp.path);
        out << "# kind=signal\n# x_start=0\n# dx=1\n# n=2\n0,1,0\n1,oops,0\n";
    }
    try {
        read_signal(tmp.path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 6);
    }
}

TEST_CASE("config parsing rejects unknown keys") {
    TempFile tmp("config.cfg");
    {
        std::ofstream out(tmp.path);
        out << "# comment\nseed=9\nnoise_level_db=-12.5\n";
    }
    const auto cfg = read_config(tmp.path, {"seed", "noise_level_db"});
    CHECK(cfg.at("seed") == "9");
    CHECK(parse_double(cfg.at("noise_level_db")) == -12.5);

    {
        std::ofstream out(tmp.path);
        out << "seed=9\nbogus=1\n";
    }
    CHECK_THROWS_AS(read_config(tmp.path, {"seed"}), ConfigInvalid);
}

TEST_CASE("params list round trip") {
    const OlctParams p = make_params(2, 1, 1, 1, 0.5, -0.3);
    const OlctParams q = parse_params_list(params_to_string(p));
    CHECK(q.a == p.a);
    CHECK(q.b == p.b);
    CHECK(q.c == p.c);
    CHECK(q.d == p.d);
    CHECK(q.u0 == p.u0);
    CHECK(q.w0 == p.w0);
    CHECK_THROWS_AS(parse_params_list("1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_params_list("1,1,1,1,0,0"), UnimodularityViolation);
}
