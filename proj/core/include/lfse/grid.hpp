#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lfse {

using cplx = std::complex<double>;

/// Uniform periodic discretization of the box [-L/2, L/2)^d, d = 1 or 2.
///
/// coords[j] = -L/2 + j*h along each axis, h = L/n.  wavenumbers holds the
/// per-axis table k = 2*pi*m/L in standard FFT frequency order
/// (m = 0..n/2-1, -n/2..-1), so max |k| = pi*n/L.
struct Grid {
    int d = 1;
    int n = 0;
    double L = 0.0;
    double h = 0.0;
    std::vector<double> coords;
    std::vector<double> wavenumbers;

    std::size_t size() const { return d == 1 ? std::size_t(n) : std::size_t(n) * n; }
    double cell_volume() const { return d == 1 ? h : h * h; }

    /// Row-major flat index; iy ignored for d = 1.
    std::size_t index(int ix, int iy = 0) const {
        return d == 1 ? std::size_t(ix) : std::size_t(ix) * n + iy;
    }
};

bool same_grid(const Grid& a, const Grid& b);

/// Complex state in physical space, one value per grid point (row-major).
struct ComplexField {
    Grid grid;
    std::vector<cplx> values;
};

/// Fourier coefficients of a ComplexField under the unitary DFT
/// (both transform directions carry 1/n^(d/2)), one mode per wavenumber
/// tuple in FFT order.  Parseval then holds with constant 1:
/// sum |values|^2 = sum |modes|^2.
struct SpectralField {
    Grid grid;
    std::vector<cplx> modes;
};

/// Throws std::invalid_argument unless d in {1,2}, n a power of two >= 8,
/// and L > 0.
Grid make_grid(int d, int n, double L);

/// Evaluates f at every grid point.  f receives the coordinate tuple
/// (size d).  A non-finite sample raises std::runtime_error naming the
/// offending coordinate.
ComplexField sample(const Grid& grid, const std::function<cplx(std::span<const double>)>& f);

ComplexField make_zero_field(const Grid& grid);

SpectralField forward(const ComplexField& field);
ComplexField inverse(const SpectralField& spec);

/// L^2 pairing (f,g) = h^d sum f * conj(g); conjugate-symmetric.
/// Throws on grid mismatch.
cplx inner_product(const ComplexField& f, const ComplexField& g);

double l2_norm(const ComplexField& f);
double l2_norm_sq(const ComplexField& f);

/// Largest |value| over the grid.
double max_abs(const ComplexField& f);

/// Largest |value| on the outermost grid shell (points adjacent to the
/// periodic seam along any axis).
double boundary_max_abs(const ComplexField& f);

/// True if every entry is finite.
bool all_finite(const ComplexField& f);

}  // namespace lfse
