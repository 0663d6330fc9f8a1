#pragma once

#include <cstdint>
#include <string>

#include "lfse/grid.hpp"
#include "lfse/lognl.hpp"

namespace lfse {

/// Named initial-datum families.  All are Schwartz-class profiles, so the
/// regularity and momentum hypotheses of the estimates hold by
/// construction.
///
///   gaussian           exp(-|x - c e_1|^2 / (2 w^2)) * exp(i kp x_1)
///   gausson            exp(-|lambda| |x|^2 / 2)   (stationary profile at s=1)
///   plane_gaussian     exp(-|x|^2 / (2 w^2)) * exp(i k0 x_1)
///   random_bandlimited seeded trig polynomial, modes |m| <= band per axis,
///                      under a fixed Gaussian envelope of width L/16
struct DatumSpec {
    std::string family = "gaussian";
    double width = 2.0;
    double center = 0.0;
    double phase_k = 0.0;
    double k0 = 0.0;
    int band = 8;
    std::uint64_t seed = 0;
};

ComplexField make_datum(const Grid& grid, const DatumSpec& spec, CouplingConstant lambda);

/// Enveloped band-limited random field; the profile is a closed-form
/// function of x, so refining the grid resamples the same function.
ComplexField random_bandlimited_field(const Grid& grid, int band, std::uint64_t seed);

/// max |phi| on the outermost shell must stay below tol * max |phi|.
bool boundary_guard_ok(const ComplexField& phi, double tol = 1e-10);

}  // namespace lfse
