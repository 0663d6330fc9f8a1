#pragma once

#include <cstdint>
#include <stdexcept>

#include "lfse/grid.hpp"

namespace lfse {

/// Exponent s of the nonlocal operator with Fourier symbol |k|^(2s).
/// s = 1 is admitted as the classical-limit sanity case.
struct FractionalOrder {
    double s;
    explicit FractionalOrder(double value) : s(value) {
        if (!(value > 0.0 && value <= 1.0))
            throw std::invalid_argument("FractionalOrder: s must lie in (0, 1]");
    }
};

/// Exponent of the spatial weight <x>^alpha, <x> = sqrt(1 + |x|^2).
/// alpha = 0 is admitted as the degenerate identity-weight control; the
/// commutator with it vanishes identically.
struct MomentOrder {
    double alpha;
    explicit MomentOrder(double value) : alpha(value) {
        if (!(value >= 0.0 && value <= 1.0))
            throw std::invalid_argument("MomentOrder: alpha must lie in [0, 1]");
    }
    /// The weighted-moment estimates require 0 < alpha < 2s (and alpha <= 1).
    bool admissible_for(FractionalOrder s) const {
        return alpha > 0.0 && alpha < 2.0 * s.s;
    }
};

/// Spectral multiplier |k|^(2s); annihilates the k = 0 mode.
ComplexField frac_laplacian(const ComplexField& u, FractionalOrder s);

/// Spectral multiplier |k|^s (square root of the quadratic form).
ComplexField half_power(const ComplexField& u, FractionalOrder s);

/// Exact flow of the linear part over time t: modes pick up the phase
/// exp(-i t |k|^(2s)).  Unitary; prop(t1) o prop(t2) = prop(t1 + t2).
ComplexField linear_propagator(const ComplexField& u, FractionalOrder s, double t);

/// Double-sum quadrature of the seminorm integral
///   sum_{i != j} |u_i - u_j|^2 / dist(i,j)^(d+2s) * h^(2d)
/// with periodic minimal-image distance, diagonal excluded.
/// Guarded to d = 1, n <= 512, s < 1.
double gagliardo_seminorm_sq(const ComplexField& u, FractionalOrder s);

/// Normalization of the second-difference integral realization:
/// 4^s Gamma(d/2 + s) / (pi^(d/2) |Gamma(-s)|).  Requires s < 1.
double singular_integral_constant(int d, FractionalOrder s);

/// Second-difference quadrature
///   -(C/2) sum_{y != 0} [u(x+y) + u(x-y) - 2u(x)] / |y|^(d+2s) * h
/// over periodic offsets with minimal-image |y|.  Guarded like the
/// Gagliardo quadrature.  Cross-validates the spectral realization.
ComplexField singular_integral_laplacian(const ComplexField& u, FractionalOrder s);

/// Pointwise multiplication by <x>^alpha in the chart [-L/2, L/2)^d.
ComplexField weight_multiply(const ComplexField& u, MomentOrder alpha);

/// [(-Delta)^s, <x>^alpha] u, evaluated as
/// frac_laplacian(weight*u) - weight*frac_laplacian(u).
ComplexField commutator_apply(const ComplexField& u, FractionalOrder s, MomentOrder alpha);

/// Empirical bound for the commutator as a map H^s -> L^2: maximum of
/// ||[., .] u|| / ||u||_{H^s} over a seeded ensemble of enveloped
/// band-limited random fields (8 modes per axis under the fixed L/16
/// envelope, so the ensemble is grid-resolution independent).
/// Deterministic given the seed.
double commutator_norm_estimate(const Grid& grid, FractionalOrder s, MomentOrder alpha,
                                int ensemble_size, std::uint64_t seed);

/// Spectral gradient component along axis (ik_a multiplier).
ComplexField spectral_gradient(const ComplexField& u, int axis);

}  // namespace lfse
