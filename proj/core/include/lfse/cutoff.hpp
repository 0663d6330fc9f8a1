#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lfse/grid.hpp"

namespace lfse {

/// Quintic smoothstep: 0 for t <= 0, 1 for t >= 1, C^2 across both ends.
inline double smoothstep_quintic(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

/// Radial amplitude cutoff: exactly 1 for |z| <= 1/4, exactly 0 for
/// |z| >= 1/2, monotone C^2 in between.
inline double theta_cutoff(std::complex<double> z) {
    const double r = std::abs(z);
    if (r <= 0.25) return 1.0;
    if (r >= 0.5) return 0.0;
    return 1.0 - smoothstep_quintic((r - 0.25) / 0.25);
}

/// Radial spatial bump: 1 on |x| <= R, 0 on |x| >= 2R, same quintic
/// profile rescaled to [R, 2R].
struct CutoffZeta {
    double R;

    explicit CutoffZeta(double radius) : R(radius) {
        if (!(radius > 0.0)) throw std::invalid_argument("CutoffZeta: R must be > 0");
    }

    double operator()(double r) const {
        const double a = std::abs(r);
        if (a <= R) return 1.0;
        if (a >= 2.0 * R) return 0.0;
        return 1.0 - smoothstep_quintic((a - R) / R);
    }
};

/// Samples zeta_R(|x|) on the grid (real-valued field).
inline ComplexField zeta_field(const Grid& grid, const CutoffZeta& zeta) {
    ComplexField out{grid, std::vector<cplx>(grid.size())};
    if (grid.d == 1) {
        for (int j = 0; j < grid.n; ++j) out.values[j] = zeta(grid.coords[j]);
    } else {
        for (int ix = 0; ix < grid.n; ++ix)
            for (int iy = 0; iy < grid.n; ++iy)
                out.values[grid.index(ix, iy)] =
                    zeta(std::hypot(grid.coords[ix], grid.coords[iy]));
    }
    return out;
}

}  // namespace lfse
