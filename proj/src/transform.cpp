#include "olct/transform.hpp"

#include <cmath>
#include <numbers>

#include "olct/errors.hpp"
#include "olct/fft.hpp"

namespace olct {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kDirectCap = 4096;
constexpr double kGridLawTol = 1e-9;

void require_main_branch(const OlctParams& p, const char* where) {
    if (!p.main_branch()) {
        throw DegenerateCase(std::string(where) + ": requires |b| > 0 (main branch)");
    }
}

double weight(Quadrature q, std::size_t k, std::size_t n) {
    if (q == Quadrature::rectangle) return 1.0;
    return (k == 0 || k + 1 == n) ? 0.5 : 1.0;
}

cdouble unit_phase(double phase) { return std::polar(1.0, phase); }

} // namespace

cdouble kernel(const OlctParams& p, double u, double x) {
    require_main_branch(p, "kernel");
    const double phase = (p.a * x * x + 2.0 * x * (p.u0 - u) -
                          2.0 * u * (p.d * p.u0 - p.b * p.w0) + p.d * u * u) /
                         (2.0 * p.b);
    return p.amplitude() * p.offset_prefactor() * unit_phase(phase);
}

GridSpec fast_u_grid(const OlctParams& p, std::size_t n, double dx) {
    require_main_branch(p, "fast_u_grid");
    const std::size_t m = next_pow2(n);
    const double du = kTwoPi * std::abs(p.b) / (static_cast<double>(m) * dx);
    return {-0.5 * static_cast<double>(m) * du, du, m};
}

Spectrum olct_direct(const OlctParams& p, const SampledSignal& f, const GridSpec& u_grid,
                     Quadrature q) {
    require_main_branch(p, "olct_direct");
    if (u_grid.n < 2 || u_grid.step <= 0.0) throw GridInvalid("olct_direct: bad u-grid");
    if (f.size() > kDirectCap || u_grid.n > kDirectCap) {
        throw GridInvalid("olct_direct: grids capped at 4096 points; use olct_fast");
    }

    const std::size_t n = f.size();
    const cdouble front = p.amplitude() * p.offset_prefactor() * f.dx;
    const double inv2b = 1.0 / (2.0 * p.b);
    const double uu_coeff = p.d * p.u0 - p.b * p.w0;

    std::vector<cdouble> weighted(n);
    for (std::size_t k = 0; k < n; ++k) {
        weighted[k] = f.samples[k] * weight(q, k, n);
    }

    std::vector<cdouble> out(u_grid.n);
    for (std::size_t j = 0; j < u_grid.n; ++j) {
        const double u = u_grid.start + static_cast<double>(j) * u_grid.step;
        cdouble acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double x = f.x(k);
            const double phase =
                (p.a * x * x + 2.0 * x * (p.u0 - u) - 2.0 * u * uu_coeff + p.d * u * u) * inv2b;
            acc += weighted[k] * unit_phase(phase);
        }
        out[j] = front * acc;
    }

    Spectrum F(u_grid.start, u_grid.step, std::move(out), p);
    F.origin_x_start = f.x_start;
    F.origin_dx = f.dx;
    return F;
}

Spectrum olct_fast(const OlctParams& p, const SampledSignal& f, Quadrature q) {
    require_main_branch(p, "olct_fast");

    const std::size_t n_in = f.size();
    const std::size_t n = next_pow2(n_in);
    const double dx = f.dx;
    const GridSpec ug = fast_u_grid(p, n_in, dx);

    const double inv2b = 1.0 / (2.0 * p.b);
    const double sgn_b = p.b > 0.0 ? 1.0 : -1.0;
    const double uu_coeff = p.d * p.u0 - p.b * p.w0;

    // Pre-chirp: f_k w_k e^{i(a x^2 + 2 x u0)/(2b)} e^{-i u_start k dx / b}.
    std::vector<cdouble> buf(n, cdouble(0.0, 0.0));
    for (std::size_t k = 0; k < n_in; ++k) {
        const double x = f.x(k);
        const double phase = (p.a * x * x + 2.0 * x * p.u0) * inv2b -
                             ug.start * static_cast<double>(k) * dx / p.b;
        buf[k] = f.samples[k] * weight(q, k, n_in) * unit_phase(phase);
    }

    // The grid law du*dx*n = 2*pi*|b| turns e^{-i u x / b} into DFT twiddles;
    // the twiddle sign follows sign(b).
    if (sgn_b > 0.0) {
        fft_forward(buf);
    } else {
        fft_inverse(buf);
    }

    // Post-chirp: A C0 dx e^{i(d u^2 - 2u(d u0 - b w0))/(2b)} e^{-i u x_start / b}.
    const cdouble front = p.amplitude() * p.offset_prefactor() * dx;
    for (std::size_t j = 0; j < n; ++j) {
        const double u = ug.start + static_cast<double>(j) * ug.step;
        const double phase = (p.d * u * u - 2.0 * u * uu_coeff) * inv2b - u * f.x_start / p.b;
        buf[j] *= front * unit_phase(phase);
    }

    Spectrum F(ug.start, ug.step, std::move(buf), p);
    F.origin_x_start = f.x_start;
    F.origin_dx = dx;
    return F;
}

SampledSignal olct_b_zero(const OlctParams& p, const SampledSignal& f) {
    if (p.main_branch()) {
        throw DegenerateCase("olct_b_zero: b must be 0");
    }
    if (p.d <= 0.0) {
        throw DegenerateCase("olct_b_zero: requires d > 0");
    }
    // Output grid u_k = x_k/d + u0 puts f(d(u - u0)) exactly on input samples.
    const double du = f.dx / p.d;
    const double u_start = f.x_start / p.d + p.u0;
    const double amp = std::sqrt(p.d);

    std::vector<cdouble> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double u = u_start + static_cast<double>(k) * du;
        const double shifted = u - p.u0;
        const double phase = 0.5 * p.c * p.d * shifted * shifted + p.w0 * u;
        out[k] = amp * unit_phase(phase) * f.samples[k];
    }
    return SampledSignal(u_start, du, std::move(out));
}

SampledSignal olct_inverse(const Spectrum& F, Quadrature q) {
    const OlctParams& p = F.params;
    require_main_branch(p, "olct_inverse");

    const std::size_t n = F.size();
    const double dx = F.origin_dx;
    const double law = kTwoPi * std::abs(p.b);
    if (std::abs(F.du * dx * static_cast<double>(n) - law) > kGridLawTol * law) {
        throw GridMismatch("olct_inverse: spectrum grid violates du = 2*pi*|b|/(n*dx)");
    }

    const double inv2b = 1.0 / (2.0 * p.b);
    const double sgn_b = p.b > 0.0 ? 1.0 : -1.0;
    const double uu_coeff = p.d * p.u0 - p.b * p.w0;

    // Conjugated post-chirp of the forward path.
    std::vector<cdouble> buf(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double u = F.u(j);
        const double phase = -(p.d * u * u - 2.0 * u * uu_coeff) * inv2b +
                             static_cast<double>(j) * F.du * F.origin_x_start / p.b;
        buf[j] = F.samples[j] * weight(q, j, n) * unit_phase(phase);
    }

    if (sgn_b > 0.0) {
        fft_inverse(buf);
    } else {
        fft_forward(buf);
    }

    const cdouble front = std::conj(p.amplitude() * p.offset_prefactor()) * F.du;
    std::vector<cdouble> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = F.origin_x_start + static_cast<double>(k) * dx;
        const double phase = -(p.a * x * x + 2.0 * x * p.u0) * inv2b + F.u_start * x / p.b;
        out[k] = buf[k] * front * unit_phase(phase);
    }
    return SampledSignal(F.origin_x_start, dx, std::move(out));
}

SampledSignal olct_inverse_direct(const Spectrum& F, const GridSpec& x_grid, Quadrature q) {
    const OlctParams& p = F.params;
    require_main_branch(p, "olct_inverse_direct");
    if (F.size() > kDirectCap || x_grid.n > kDirectCap) {
        throw GridInvalid("olct_inverse_direct: grids capped at 4096 points");
    }

    const std::size_t m = F.size();
    std::vector<cdouble> weighted(m);
    for (std::size_t j = 0; j < m; ++j) {
        weighted[j] = F.samples[j] * weight(q, j, m);
    }

    std::vector<cdouble> out(x_grid.n);
    for (std::size_t k = 0; k < x_grid.n; ++k) {
        const double x = x_grid.start + static_cast<double>(k) * x_grid.step;
        cdouble acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            acc += std::conj(kernel(p, F.u(j), x)) * weighted[j];
        }
        out[k] = acc * F.du;
    }
    return SampledSignal(x_grid.start, x_grid.step, std::move(out));
}

SampledSignal olct_inverse_via_params(const Spectrum& F, const GridSpec& x_grid,
                                      InverseConstant constant) {
    const OlctParams& p = F.params;
    require_main_branch(p, "olct_inverse_via_params");
    const OlctParams pinv = inverse_params(p);

    const double bracket =
        p.c * p.d * p.u0 * p.u0 - 2.0 * p.a * p.d * p.u0 * p.w0 + p.a * p.b * p.w0 * p.w0;
    cdouble C(1.0, 0.0);
    switch (constant) {
        case InverseConstant::def_c: C = unit_phase(0.5 * bracket); break;
        case InverseConstant::eq_c: C = unit_phase(bracket / p.b); break;
        case InverseConstant::none: break;
    }

    const SampledSignal spec_as_signal(F.u_start, F.du, F.samples);
    const Spectrum G = olct_direct(pinv, spec_as_signal, x_grid);
    std::vector<cdouble> out(G.samples);
    for (auto& z : out) z *= C;
    return SampledSignal(x_grid.start, x_grid.step, std::move(out));
}

} // namespace olct
