#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "olct/errors.hpp"
#include "olct/generate.hpp"
#include "olct/report.hpp"
#include "olct/transform.hpp"

using namespace olct;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent classical-FT oracle: (1/sqrt(2 pi)) sum f_k e^{-i u x_k} dx.
std::vector<cdouble> naive_ft(const SampledSignal& f, const std::vector<double>& us) {
    std::vector<cdouble> out(us.size());
    for (std::size_t j = 0; j < us.size(); ++j) {
        cdouble acc = 0.0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            const double w = (k == 0 || k + 1 == f.size()) ? 0.5 : 1.0;
            acc += w * f.samples[k] * std::polar(1.0, -us[j] * f.x(k));
        }
        out[j] = acc * f.dx / std::sqrt(2.0 * kPi);
    }
    return out;
}

double max_abs_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    REQUIRE(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double rel_l2_diff(const SampledSignal& a, const SampledSignal& b) {
    REQUIRE(a.size() == b.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a.samples[i] - b.samples[i]);
        den += std::norm(b.samples[i]);
    }
    return std::sqrt(num / den);
}

} // namespace

TEST_CASE("make_params validates unimodularity") {
    CHECK_NOTHROW(make_params(0, 1, -1, 0, 0, 0));
    CHECK_NOTHROW(make_params(1, 1, 1, 2, 1, 0));  // ad - bc = 2 - 1 = 1
    CHECK_THROWS_AS(make_params(1, 1, 1, 1, 0, 0), UnimodularityViolation);
    CHECK(make_params(0, 1, -1, 0, 0, 0).main_branch());
    CHECK_FALSE(make_params(1, 0, 0, 1, 0, 0).main_branch());
}

TEST_CASE("special parameter tuples") {
    const OlctParams ft = ft_params();
    CHECK(ft.a == 0.0);
    CHECK(ft.b == 1.0);
    CHECK(ft.c == -1.0);
    CHECK(ft.d == 0.0);

    // FrFT(pi/2) reduces to the FT tuple.
    const OlctParams fr = frft_params(kPi / 2.0);
    CHECK(std::abs(fr.a) < 1e-15);
    CHECK(fr.b == doctest::Approx(1.0));
    CHECK(fr.c == doctest::Approx(-1.0));
    CHECK(std::abs(fr.d) < 1e-15);

    CHECK_THROWS_AS(frft_params(kPi), DegenerateCase);
    CHECK_THROWS_AS(frft_params(0.0), DegenerateCase);
    CHECK_THROWS_AS(lct_params(1, 2, 0, 0.5), UnimodularityViolation);
    CHECK_NOTHROW(lct_params(1, 2, 0, 1));  // det = 1*1 - 2*0 = 1
    const OlctParams fz = fresnel_params(0.5);
    CHECK(fz.a == 1.0);
    CHECK(fz.b == 0.5);
    CHECK(fz.c == 0.0);
    CHECK(fz.d == 1.0);
    const OlctParams oft = offset_ft_params(0.7, -0.2);
    CHECK(oft.u0 == 0.7);
    CHECK(oft.w0 == -0.2);
}

TEST_CASE("kernel values at hand-derived points") {
    // FT params at (u, x) = (0, 0): sqrt(1/(2 pi i)) = (1/sqrt(2 pi)) e^{-i pi/4}.
    const cdouble k0 = kernel(ft_params(), 0.0, 0.0);
    const cdouble expect0 = std::polar(1.0 / std::sqrt(2.0 * kPi), -kPi / 4.0);
    CHECK(std::abs(k0 - expect0) < 1e-15);

    // (1,1,1,2,1,0) at (0,0): only the offset prefactor e^{i d u0^2/(2b)} = e^{i} survives.
    const OlctParams p = make_params(1, 1, 1, 2, 1, 0);
    const cdouble k1 = kernel(p, 0.0, 0.0);
    const cdouble expect1 = std::polar(1.0 / std::sqrt(2.0 * kPi), 1.0 - kPi / 4.0);
    CHECK(std::abs(k1 - expect1) < 1e-15);

    // Fresnel tuple reduces to the quadratic-phase kernel e^{i (x-u)^2 / (2 z)} (z = 0.5).
    const OlctParams fz = fresnel_params(0.5);
    for (const auto& [u, x] : std::vector<std::pair<double, double>>{
             {0.0, 0.0}, {0.7, -0.3}, {-1.2, 2.1}}) {
        const cdouble expect = std::sqrt(1.0 / (2.0 * kPi * cdouble(0.0, 1.0) * 0.5)) *
                               std::polar(1.0, (x - u) * (x - u));
        CHECK(std::abs(kernel(fz, u, x) - expect) < 1e-12);
    }

    CHECK_THROWS_AS(kernel(make_params(1, 0, 0, 1, 0, 0), 0.0, 0.0), DegenerateCase);
}

TEST_CASE("kernel modulus is 1/sqrt(2 pi |b|) everywhere") {
    for (const OlctParams& p :
         {make_params(1, 1, 1, 2, 1, 0), frft_params(0.4), make_params(0, -1, 1, 0, 0.3, 0.7)}) {
        const double expect = 1.0 / std::sqrt(2.0 * kPi * std::abs(p.b));
        SplitMix64 rng(7);
        for (int i = 0; i < 50; ++i) {
            const double u = 20.0 * (rng.uniform() - 0.5);
            const double x = 20.0 * (rng.uniform() - 0.5);
            CHECK(std::abs(kernel(p, u, x)) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("zero signal transforms to zero spectrum") {
    const SampledSignal zero(-4.0, 0.125, std::vector<cdouble>(64, 0.0));
    const Spectrum F = olct_fast(ft_params(), zero);
    CHECK(max_abs(F.samples) == 0.0);
    const Spectrum Fd = olct_direct(ft_params(), zero, fast_u_grid(ft_params(), 64, 0.125));
    CHECK(max_abs(Fd.samples) == 0.0);
    CHECK(max_abs(olct_inverse(F).samples) == 0.0);
}

TEST_CASE("Gaussian energy = sqrt(pi) and Parseval under FT params") {
    const GridSpec g{-12.0, 24.0 / 2048.0, 2048};
    const SampledSignal f = gen_gaussian(g, 0.0, 1.0);
    const double e_time = l2_norm(f) * l2_norm(f);
    CHECK(e_time == doctest::Approx(std::sqrt(kPi)).epsilon(1e-7));

    const Spectrum F = olct_fast(ft_params(), f);
    const double e_spec = l2_norm(F) * l2_norm(F);
    CHECK(std::abs(e_spec - e_time) / e_time < 1e-6);
}

TEST_CASE("linearity of the transform") {
    const GridSpec g{-8.0, 16.0 / 256.0, 256};
    const SampledSignal f = gen_random_smooth(g, 11);
    const SampledSignal h = gen_random_smooth(g, 12);
    const cdouble alpha(0.7, -0.4), beta(-1.1, 0.2);

    std::vector<cdouble> mix(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        mix[k] = alpha * f.samples[k] + beta * h.samples[k];
    }
    const OlctParams p = make_params(1, 1, 1, 2, 1, 0);
    const Spectrum Fmix = olct_fast(p, SampledSignal(g.start, g.step, mix));
    const Spectrum Ff = olct_fast(p, f);
    const Spectrum Fh = olct_fast(p, h);
    double err = 0.0;
    for (std::size_t j = 0; j < Fmix.size(); ++j) {
        err = std::max(err,
                       std::abs(Fmix.samples[j] - alpha * Ff.samples[j] - beta * Fh.samples[j]));
    }
    CHECK(err < 1e-12 * max_abs(Fmix.samples) + 1e-14);

    // Same property through the quadrature path.
    const GridSpec ug = fast_u_grid(p, g.n, g.step);
    const Spectrum Dmix = olct_direct(p, SampledSignal(g.start, g.step, mix), ug);
    const Spectrum Df = olct_direct(p, f, ug);
    const Spectrum Dh = olct_direct(p, h, ug);
    err = 0.0;
    for (std::size_t j = 0; j < Dmix.size(); ++j) {
        err = std::max(err,
                       std::abs(Dmix.samples[j] - alpha * Df.samples[j] - beta * Dh.samples[j]));
    }
    CHECK(err < 1e-12 * max_abs(Dmix.samples) + 1e-14);
}

TEST_CASE("fast path matches the direct-quadrature oracle") {
    const std::vector<OlctParams> sweep = {
        ft_params(), frft_params(kPi / 3.0), make_params(1, 1, 1, 2, 1, 0),
        make_params(2, 1, 1, 1, 0.5, -0.3), make_params(0, -1, 1, 0, 0.2, -0.4)};
    const GridSpec g{-8.0, 16.0 / 256.0, 256};
    for (const auto& p : sweep) {
        for (std::uint64_t seed : {1ULL, 2ULL}) {
            const SampledSignal f = gen_random_smooth(g, seed);
            const Spectrum Ff = olct_fast(p, f);
            const Spectrum Fd = olct_direct(p, f, Ff.grid());
            const double err = max_abs_diff(Ff.samples, Fd.samples);
            CHECK(err <= 1e-9 * max_abs(Ff.samples));
        }
    }
}

TEST_CASE("impulse transforms to constant modulus 1/sqrt(2 pi)") {
    const std::size_t n = 256;
    const double dx = 16.0 / static_cast<double>(n);
    std::vector<cdouble> v(n, 0.0);
    v[n / 2] = 1.0 / dx;  // x = 0 sits at index n/2 on the centered grid
    const SampledSignal f(-8.0, dx, std::move(v));
    const Spectrum F = olct_fast(ft_params(), f);
    const double expect = 1.0 / std::sqrt(2.0 * kPi);
    for (std::size_t j = 0; j < F.size(); ++j) {
        CHECK(std::abs(F.samples[j]) == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("classical FT reduction: constant unit-modulus ratio") {
    const GridSpec g{-10.0, 20.0 / 512.0, 512};
    const SampledSignal f = gen_random_smooth(g, 3);
    const Spectrum F = olct_fast(ft_params(), f);

    std::vector<double> us(F.size());
    for (std::size_t j = 0; j < F.size(); ++j) us[j] = F.u(j);
    const std::vector<cdouble> Fft = naive_ft(f, us);

    const double peak = max_abs(F.samples);
    cdouble mean = 0.0;
    std::size_t count = 0;
    std::vector<cdouble> ratios;
    for (std::size_t j = 0; j < F.size(); ++j) {
        if (std::abs(F.samples[j]) > 1e-6 * peak) {
            ratios.push_back(F.samples[j] / Fft[j]);
            mean += ratios.back();
            ++count;
        }
    }
    REQUIRE(count > 10);
    mean /= static_cast<double>(count);

    // Expected constant sqrt(1/i) = e^{-i pi/4}.
    CHECK(std::abs(mean - std::polar(1.0, -kPi / 4.0)) < 1e-9);
    double var = 0.0;
    for (const auto& r : ratios) var += std::norm(r - mean);
    CHECK(std::sqrt(var / static_cast<double>(count)) < 1e-9);
}

TEST_CASE("classical FrFT reduction: constant unit-modulus ratio") {
    const double alpha = kPi / 3.0;
    const GridSpec g{-10.0, 20.0 / 512.0, 512};
    const SampledSignal f = gen_random_smooth(g, 5);
    const Spectrum F = olct_fast(frft_params(alpha), f);

    // Classical FrFT oracle: sqrt((1 - i cot a)/(2 pi)) e^{i(cot a (x^2+u^2)/2 - x u csc a)}.
    const double ct = 1.0 / std::tan(alpha);
    const double cs = 1.0 / std::sin(alpha);
    const cdouble amp = std::sqrt((cdouble(1.0, 0.0) - cdouble(0.0, ct)) / (2.0 * kPi));
    const double peak = max_abs(F.samples);
    cdouble first = 0.0;
    bool have_first = false;
    for (std::size_t j = 0; j < F.size(); j += 7) {
        if (std::abs(F.samples[j]) <= 1e-5 * peak) continue;
        const double u = F.u(j);
        cdouble acc = 0.0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            const double w = (k == 0 || k + 1 == f.size()) ? 0.5 : 1.0;
            const double x = f.x(k);
            acc += w * f.samples[k] *
                   std::polar(1.0, 0.5 * ct * (x * x + u * u) - x * u * cs);
        }
        const cdouble frft = amp * acc * f.dx;
        const cdouble ratio = F.samples[j] / frft;
        CHECK(std::abs(ratio) == doctest::Approx(1.0).epsilon(1e-9));
        if (!have_first) {
            first = ratio;
            have_first = true;
        } else {
            CHECK(std::abs(ratio - first) < 1e-9);
        }
    }
    REQUIRE(have_first);
}

TEST_CASE("round trip inverse(fast(f)) = f") {
    const OlctParams p = make_params(1, 1, 1, 2, 1, 0);
    const GridSpec g{-12.0, 24.0 / 1024.0, 1024};
    const SampledSignal f = gen_gaussian(g, 0.0, 1.0);
    const SampledSignal back = olct_inverse(olct_fast(p, f));
    CHECK(back.x_start == doctest::Approx(f.x_start));
    CHECK(rel_l2_diff(back, f) < 1e-8);

    // Also on a non-centered grid (origin metadata drives the inverse).
    const GridSpec g2{-10.0, 24.0 / 1024.0, 1024};
    const SampledSignal f2 = gen_gaussian(g2, 1.5, 1.0);
    CHECK(rel_l2_diff(olct_inverse(olct_fast(p, f2)), f2) < 1e-8);
}

TEST_CASE("inverse under FT params equals the standard inverse FT") {
    const GridSpec g{-10.0, 20.0 / 256.0, 256};
    const SampledSignal f = gen_random_smooth(g, 9);
    const Spectrum F = olct_fast(ft_params(), f);
    const SampledSignal inv = olct_inverse(F);

    // Standard inverse FT of the phase-corrected spectrum,
    // f(x) = (1/sqrt(2 pi)) sum F_ft(u_j) e^{i u x} du with F_ft = F * e^{i pi/4}.
    std::vector<cdouble> expect(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        cdouble acc = 0.0;
        for (std::size_t j = 0; j < F.size(); ++j) {
            const double w = (j == 0 || j + 1 == F.size()) ? 0.5 : 1.0;
            acc += w * F.samples[j] * std::polar(1.0, kPi / 4.0 + F.u(j) * f.x(k));
        }
        expect[k] = acc * F.du / std::sqrt(2.0 * kPi);
    }
    CHECK(max_abs_diff(inv.samples, expect) < 1e-9 * max_abs(expect));
}

TEST_CASE("inverse rejects grids violating the fast-path law") {
    const SampledSignal f = gen_gaussian({-8.0, 16.0 / 128.0, 128}, 0.0, 1.0);
    Spectrum F = olct_fast(ft_params(), f);
    F.du *= 1.01;
    CHECK_THROWS_AS(olct_inverse(F), GridMismatch);
}

TEST_CASE("b = 0 branch") {
    const GridSpec g{-6.0, 12.0 / 128.0, 128};
    const SampledSignal f = gen_gaussian(g, 0.0, 1.5);

    SUBCASE("identity parameters pass the signal through") {
        const SampledSignal out = olct_b_zero(make_params(1, 0, 0, 1, 0, 0), f);
        CHECK(out.x_start == doctest::Approx(f.x_start));
        CHECK(max_abs_diff(out.samples, f.samples) == 0.0);
    }
    SUBCASE("d = 1/2 dilation preserves the L2 norm") {
        const SampledSignal out = olct_b_zero(make_params(2, 0, 0.7, 0.5, 0, 0), f);
        CHECK(l2_norm(out) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
        // Output grid u = 2 x: f(u/2) scaled by sqrt(1/2) (plus a unit chirp).
        CHECK(out.dx == doctest::Approx(2.0 * f.dx));
    }
    SUBCASE("pure shift when u0 = 1, d = 1, c = 0") {
        const SampledSignal out = olct_b_zero(make_params(1, 0, 0, 1, 1, 0), f);
        CHECK(out.x_start == doctest::Approx(f.x_start + 1.0));
        CHECK(max_abs_diff(out.samples, f.samples) == 0.0);  // output(u) = f(u - 1)
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(olct_b_zero(make_params(-1, 0, 0, -1, 0, 0), f), DegenerateCase);
        CHECK_THROWS_AS(olct_b_zero(ft_params(), f), DegenerateCase);
    }
}

TEST_CASE("verify_parseval reports") {
    const GridSpec g{-12.0, 24.0 / 2048.0, 2048};
    const SampledSignal f = gen_gaussian(g, 0.0, 1.0);
    const VerificationReport r = verify_parseval(ft_params(), f);
    CHECK(r.passed);
    CHECK(r.rel_err <= 1e-6);

    const SampledSignal s = gen_random_smooth(g, 21);
    const VerificationReport r2 = verify_parseval(make_params(1, 1, 1, 2, 1, 0), s);
    CHECK(r2.passed);
}

TEST_CASE("verify_riemann_lebesgue") {
    const GridSpec g{-20.0, 40.0 / 4096.0, 4096};
    const VerificationReport r =
        verify_riemann_lebesgue(ft_params(), gen_gaussian(g, 0.0, 1.0), 0.05);
    CHECK(r.passed);
    CHECK(r.rel_err <= 1e-3);

    const SampledSignal zero(-4.0, 0.125, std::vector<cdouble>(64, 0.0));
    CHECK(verify_riemann_lebesgue(ft_params(), zero, 0.05).passed);

    // Rectangular pulse decays like 1/|u|; passes at the loose tolerance.
    const VerificationReport rr =
        verify_riemann_lebesgue(ft_params(), gen_rect(g, -1.0, 1.0), 0.05, 1e-1);
    CHECK(rr.passed);
}

TEST_CASE("inverse tuple: half-angle constant matches the adjoint inverse") {
    const OlctParams p = make_params(1, 1, 1, 2, 1, 0);
    const GridSpec g{-12.0, 24.0 / 512.0, 512};
    const SampledSignal f = gen_random_smooth(g, 17);
    const VerificationReport r = verify_inverse_tuple(p, f);
    CHECK(r.passed);
    CHECK(r.rel_err < 1e-8);
    CHECK(r.details.at("matching_constant") == "half");
    // At these params the matching constant is e^{i}: (i/2)(c d u0^2) = i.
    CHECK(std::stod(r.details.at("measured_constant_re")) ==
          doctest::Approx(std::cos(1.0)).epsilon(1e-6));
    CHECK(std::stod(r.details.at("measured_constant_im")) ==
          doctest::Approx(std::sin(1.0)).epsilon(1e-6));
}
