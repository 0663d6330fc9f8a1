#include "lfse/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fft.hpp"

namespace lfse {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (!same_grid(a, b)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

}  // namespace

bool same_grid(const Grid& a, const Grid& b) {
    return a.d == b.d && a.n == b.n && a.L == b.L;
}

Grid make_grid(int d, int n, double L) {
    if (d != 1 && d != 2) throw std::invalid_argument("make_grid: d must be 1 or 2");
    if (n < 8 || !is_power_of_two(n))
        throw std::invalid_argument("make_grid: n must be a power of two >= 8");
    if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("make_grid: L must be > 0");

    Grid g;
    g.d = d;
    g.n = n;
    g.L = L;
    g.h = L / n;
    g.coords.resize(n);
    g.wavenumbers.resize(n);
    const double dk = 2.0 * std::numbers::pi / L;
    for (int j = 0; j < n; ++j) {
        g.coords[j] = -L / 2.0 + j * g.h;
        const int m = j < n / 2 ? j : j - n;  // FFT frequency order
        g.wavenumbers[j] = dk * m;
    }
    return g;
}

ComplexField make_zero_field(const Grid& grid) {
    return ComplexField{grid, std::vector<cplx>(grid.size(), cplx{0.0, 0.0})};
}

ComplexField sample(const Grid& grid, const std::function<cplx(std::span<const double>)>& f) {
    ComplexField out = make_zero_field(grid);
    double xy[2] = {0.0, 0.0};
    if (grid.d == 1) {
        for (int j = 0; j < grid.n; ++j) {
            xy[0] = grid.coords[j];
            const cplx v = f(std::span<const double>(xy, 1));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                std::ostringstream msg;
                msg << "sample: non-finite value at x = " << xy[0];
                throw std::runtime_error(msg.str());
            }
            out.values[j] = v;
        }
        return out;
    }
    for (int ix = 0; ix < grid.n; ++ix) {
        xy[0] = grid.coords[ix];
        for (int iy = 0; iy < grid.n; ++iy) {
            xy[1] = grid.coords[iy];
            const cplx v = f(std::span<const double>(xy, 2));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                std::ostringstream msg;
                msg << "sample: non-finite value at x = (" << xy[0] << ", " << xy[1] << ")";
                throw std::runtime_error(msg.str());
            }
            out.values[grid.index(ix, iy)] = v;
        }
    }
    return out;
}

SpectralField forward(const ComplexField& field) {
    if (field.values.size() != field.grid.size())
        throw std::invalid_argument("forward: field does not match its grid");
    SpectralField spec{field.grid, std::vector<cplx>(field.grid.size())};
    detail::dft(field.grid, field.values.data(), spec.modes.data(), true);
    return spec;
}

ComplexField inverse(const SpectralField& spec) {
    if (spec.modes.size() != spec.grid.size())
        throw std::invalid_argument("inverse: modes do not match their grid");
    ComplexField field{spec.grid, std::vector<cplx>(spec.grid.size())};
    detail::dft(spec.grid, spec.modes.data(), field.values.data(), false);
    return field;
}

cplx inner_product(const ComplexField& f, const ComplexField& g) {
    require_same_grid(f.grid, g.grid, "inner_product");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * std::conj(g.values[i]);
    return acc * f.grid.cell_volume();
}

double l2_norm_sq(const ComplexField& f) {
    double acc = 0.0;
    for (const cplx& v : f.values) acc += std::norm(v);
    return acc * f.grid.cell_volume();
}

double l2_norm(const ComplexField& f) { return std::sqrt(l2_norm_sq(f)); }

double max_abs(const ComplexField& f) {
    double m = 0.0;
    for (const cplx& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double boundary_max_abs(const ComplexField& f) {
    const Grid& g = f.grid;
    double m = 0.0;
    if (g.d == 1) {
        m = std::max(std::abs(f.values.front()), std::abs(f.values.back()));
        return m;
    }
    for (int i = 0; i < g.n; ++i) {
        m = std::max(m, std::abs(f.values[g.index(0, i)]));
        m = std::max(m, std::abs(f.values[g.index(g.n - 1, i)]));
        m = std::max(m, std::abs(f.values[g.index(i, 0)]));
        m = std::max(m, std::abs(f.values[g.index(i, g.n - 1)]));
    }
    return m;
}

bool all_finite(const ComplexField& f) {
    for (const cplx& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

}  // namespace lfse
