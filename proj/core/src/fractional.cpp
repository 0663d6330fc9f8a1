#include "lfse/fractional.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lfse/initial_data.hpp"
#include "lfse/observables.hpp"

namespace lfse {

namespace {

// Applies a diagonal spectral multiplier m(|k|) (complex-valued).
template <typename MultiplierFn>
ComplexField apply_radial_multiplier(const ComplexField& u, MultiplierFn&& m) {
    SpectralField spec = forward(u);
    const Grid& g = u.grid;
    if (g.d == 1) {
        for (int j = 0; j < g.n; ++j) spec.modes[j] *= m(std::abs(g.wavenumbers[j]));
    } else {
        for (int ix = 0; ix < g.n; ++ix)
            for (int iy = 0; iy < g.n; ++iy)
                spec.modes[g.index(ix, iy)] *=
                    m(std::hypot(g.wavenumbers[ix], g.wavenumbers[iy]));
    }
    return inverse(spec);
}

void require_quadrature_domain(const ComplexField& u, FractionalOrder s, const char* where) {
    if (u.grid.d != 1)
        throw std::invalid_argument(std::string(where) + ": cost guard, only d = 1 supported");
    if (u.grid.n > 512)
        throw std::invalid_argument(std::string(where) + ": cost guard, n must be <= 512");
    if (s.s >= 1.0)
        throw std::invalid_argument(std::string(where) + ": requires s < 1");
}

}  // namespace

ComplexField frac_laplacian(const ComplexField& u, FractionalOrder s) {
    const double p = 2.0 * s.s;
    return apply_radial_multiplier(u, [p](double k) { return std::pow(k, p); });
}

ComplexField half_power(const ComplexField& u, FractionalOrder s) {
    const double p = s.s;
    return apply_radial_multiplier(u, [p](double k) { return std::pow(k, p); });
}

ComplexField linear_propagator(const ComplexField& u, FractionalOrder s, double t) {
    const double p = 2.0 * s.s;
    return apply_radial_multiplier(u, [p, t](double k) {
        return std::exp(cplx{0.0, -t * std::pow(k, p)});
    });
}

ComplexField spectral_gradient(const ComplexField& u, int axis) {
    const Grid& g = u.grid;
    if (axis < 0 || axis >= g.d) throw std::invalid_argument("spectral_gradient: bad axis");
    SpectralField spec = forward(u);
    if (g.d == 1) {
        for (int j = 0; j < g.n; ++j) spec.modes[j] *= cplx{0.0, g.wavenumbers[j]};
    } else {
        for (int ix = 0; ix < g.n; ++ix)
            for (int iy = 0; iy < g.n; ++iy) {
                const double k = axis == 0 ? g.wavenumbers[ix] : g.wavenumbers[iy];
                spec.modes[g.index(ix, iy)] *= cplx{0.0, k};
            }
    }
    return inverse(spec);
}

double gagliardo_seminorm_sq(const ComplexField& u, FractionalOrder s) {
    require_quadrature_domain(u, s, "gagliardo_seminorm_sq");
    const Grid& g = u.grid;
    const int n = g.n;
    const double p = 1.0 + 2.0 * s.s;

    // Kernel depends on the index offset only; tabulate once.
    std::vector<double> kernel(n, 0.0);
    for (int m = 1; m < n; ++m) {
        const double dist = std::min(m, n - m) * g.h;
        kernel[m] = std::pow(dist, -p);
    }

    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int m = i - j >= 0 ? i - j : i - j + n;
            acc += std::norm(u.values[i] - u.values[j]) * kernel[m];
        }
    }
    return acc * g.h * g.h;
}

double singular_integral_constant(int d, FractionalOrder s) {
    if (s.s >= 1.0)
        throw std::invalid_argument("singular_integral_constant: requires s < 1");
    const double num = std::pow(4.0, s.s) * std::tgamma(0.5 * d + s.s);
    const double den = std::pow(std::numbers::pi, 0.5 * d) * std::abs(std::tgamma(-s.s));
    return num / den;
}

ComplexField singular_integral_laplacian(const ComplexField& u, FractionalOrder s) {
    require_quadrature_domain(u, s, "singular_integral_laplacian");
    const Grid& g = u.grid;
    const int n = g.n;
    const double p = 1.0 + 2.0 * s.s;
    const double C = singular_integral_constant(1, s);

    std::vector<double> kernel(n, 0.0);
    for (int m = 1; m < n; ++m) {
        const double dist = std::min(m, n - m) * g.h;
        kernel[m] = std::pow(dist, -p);
    }

    ComplexField out = make_zero_field(g);
    for (int i = 0; i < n; ++i) {
        cplx acc{0.0, 0.0};
        const cplx u2 = 2.0 * u.values[i];
        for (int m = 1; m < n; ++m) {
            const int ip = i + m < n ? i + m : i + m - n;
            const int im = i - m >= 0 ? i - m : i - m + n;
            acc += (u.values[ip] + u.values[im] - u2) * kernel[m];
        }
        out.values[i] = -(C / 2.0) * acc * g.h;
    }
    return out;
}

ComplexField weight_multiply(const ComplexField& u, MomentOrder alpha) {
    const Grid& g = u.grid;
    ComplexField out = u;
    const double half_alpha = alpha.alpha / 2.0;
    if (g.d == 1) {
        for (int j = 0; j < g.n; ++j) {
            const double x = g.coords[j];
            out.values[j] *= std::pow(1.0 + x * x, half_alpha);
        }
    } else {
        for (int ix = 0; ix < g.n; ++ix)
            for (int iy = 0; iy < g.n; ++iy) {
                const double x = g.coords[ix], y = g.coords[iy];
                out.values[g.index(ix, iy)] *= std::pow(1.0 + x * x + y * y, half_alpha);
            }
    }
    return out;
}

ComplexField commutator_apply(const ComplexField& u, FractionalOrder s, MomentOrder alpha) {
    ComplexField a = frac_laplacian(weight_multiply(u, alpha), s);
    const ComplexField b = weight_multiply(frac_laplacian(u, s), alpha);
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] -= b.values[i];
    return a;
}

double commutator_norm_estimate(const Grid& grid, FractionalOrder s, MomentOrder alpha,
                                int ensemble_size, std::uint64_t seed) {
    if (ensemble_size < 16)
        throw std::invalid_argument("commutator_norm_estimate: ensemble_size must be >= 16");
    if (alpha.alpha == 0.0) return 0.0;

    double worst = 0.0;
    for (int j = 0; j < ensemble_size; ++j) {
        const ComplexField u = random_bandlimited_field(grid, 8, seed + std::uint64_t(j));
        const double num = l2_norm(commutator_apply(u, s, alpha));
        const double den = std::sqrt(l2_norm_sq(u) + hs_seminorm(u, s) * hs_seminorm(u, s));
        if (den > 0.0) worst = std::max(worst, num / den);
    }
    return worst;
}

}  // namespace lfse
