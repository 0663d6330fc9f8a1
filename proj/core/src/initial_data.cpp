#include "lfse/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lfse/rng.hpp"

namespace lfse {

namespace {

using std::numbers::pi;

ComplexField gaussian_datum(const Grid& g, double width, double center, double phase_k) {
    if (!(width > 0.0)) throw std::invalid_argument("gaussian datum: width must be > 0");
    return sample(g, [&](std::span<const double> x) -> cplx {
        double r2 = (x[0] - center) * (x[0] - center);
        if (x.size() == 2) r2 += x[1] * x[1];
        const double amp = std::exp(-r2 / (2.0 * width * width));
        return amp * std::exp(cplx{0.0, phase_k * x[0]});
    });
}

}  // namespace

ComplexField random_bandlimited_field(const Grid& grid, int band, std::uint64_t seed) {
    if (band < 1) throw std::invalid_argument("random_bandlimited_field: band must be >= 1");
    Rng rng(seed);
    const double dk = 2.0 * pi / grid.L;
    const double sigma = grid.L / 16.0;  // envelope keeps mass away from the seam

    if (grid.d == 1) {
        // Draw coefficients in a fixed order independent of n.
        std::vector<cplx> coef;
        std::vector<double> ks;
        for (int m = -band; m <= band; ++m) {
            coef.push_back(rng.complex_normal() / (1.0 + std::abs(double(m))));
            ks.push_back(dk * m);
        }
        ComplexField out = make_zero_field(grid);
        for (int j = 0; j < grid.n; ++j) {
            const double x = grid.coords[j];
            cplx acc{0.0, 0.0};
            for (std::size_t t = 0; t < coef.size(); ++t)
                acc += coef[t] * std::exp(cplx{0.0, ks[t] * x});
            out.values[j] = acc * std::exp(-x * x / (2.0 * sigma * sigma));
        }
        return out;
    }

    std::vector<cplx> coef;
    std::vector<std::pair<double, double>> ks;
    for (int mx = -band; mx <= band; ++mx)
        for (int my = -band; my <= band; ++my) {
            const double w = 1.0 + std::hypot(double(mx), double(my));
            coef.push_back(rng.complex_normal() / w);
            ks.emplace_back(dk * mx, dk * my);
        }
    ComplexField out = make_zero_field(grid);
    for (int ix = 0; ix < grid.n; ++ix)
        for (int iy = 0; iy < grid.n; ++iy) {
            const double x = grid.coords[ix], y = grid.coords[iy];
            cplx acc{0.0, 0.0};
            for (std::size_t t = 0; t < coef.size(); ++t)
                acc += coef[t] * std::exp(cplx{0.0, ks[t].first * x + ks[t].second * y});
            out.values[grid.index(ix, iy)] =
                acc * std::exp(-(x * x + y * y) / (2.0 * sigma * sigma));
        }
    return out;
}

ComplexField make_datum(const Grid& grid, const DatumSpec& spec, CouplingConstant lambda) {
    if (spec.family == "gaussian")
        return gaussian_datum(grid, spec.width, spec.center, spec.phase_k);

    if (spec.family == "gausson") {
        const double a = std::abs(lambda.lambda);
        if (!(a > 0.0))
            throw std::invalid_argument("gausson datum: requires lambda != 0");
        return sample(grid, [&](std::span<const double> x) -> cplx {
            double r2 = x[0] * x[0];
            if (x.size() == 2) r2 += x[1] * x[1];
            return std::exp(-a * r2 / 2.0);
        });
    }

    if (spec.family == "plane_gaussian") {
        if (!(spec.width > 0.0))
            throw std::invalid_argument("plane_gaussian datum: width must be > 0");
        return sample(grid, [&](std::span<const double> x) -> cplx {
            double r2 = x[0] * x[0];
            if (x.size() == 2) r2 += x[1] * x[1];
            const double amp = std::exp(-r2 / (2.0 * spec.width * spec.width));
            return amp * std::exp(cplx{0.0, spec.k0 * x[0]});
        });
    }

    if (spec.family == "random_bandlimited")
        return random_bandlimited_field(grid, spec.band, spec.seed);

    throw std::invalid_argument("make_datum: unknown family '" + spec.family + "'");
}

bool boundary_guard_ok(const ComplexField& phi, double tol) {
    const double peak = max_abs(phi);
    if (peak == 0.0) return true;
    return boundary_max_abs(phi) < tol * peak;
}

}  // namespace lfse
