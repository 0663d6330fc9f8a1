#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

#include "lfse/grid.hpp"

namespace lfse {

/// Amplitudes below this are treated as exact vacuum: z log|z| -> 0.
inline constexpr double kAmplitudeFloor = 1e-300;

/// Regularization parameter of the smoothed logarithm log(|u| + eps).
/// eps = 0 selects the unregularized nonlinearity.
struct RegularizationLevel {
    double eps;
    explicit RegularizationLevel(double value) : eps(value) {
        if (!(value >= 0.0)) throw std::invalid_argument("RegularizationLevel: eps must be >= 0");
    }
};

/// Coupling constant of the logarithmic term; either sign.
struct CouplingConstant {
    double lambda;
    explicit CouplingConstant(double value) : lambda(value) {
        if (!std::isfinite(value)) throw std::invalid_argument("CouplingConstant: lambda must be finite");
    }
    int sign() const { return lambda > 0.0 ? 1 : (lambda < 0.0 ? -1 : 0); }
};

/// log(|z|^2) evaluated as 2 log|z|, with 0 below the amplitude floor.
double log_sq_modulus(cplx z);

/// 2 z log(|z| + eps); total, returns 0 at the vacuum limit.
cplx g_eps(cplx z, RegularizationLevel eps);

/// mu_eps(sigma) = integral_0^sigma 2 t^2/(t + eps) dt, in closed form
/// (series branch for sigma << eps to avoid cancellation).
double mu_eps(double sigma, RegularizationLevel eps);

/// Exact flow of the nonlinear part alone over dt:
///   u -> u * exp(-2 i lambda dt log(|u| + eps)).
/// Pointwise modulus is preserved.
ComplexField nonlinear_phase_flow(const ComplexField& u, CouplingConstant lambda,
                                  RegularizationLevel eps, double dt);

/// Field of g_eps values (the nonlinearity evaluated pointwise).
ComplexField g_eps_field(const ComplexField& u, RegularizationLevel eps);

/// F1 = theta(z) |z|^2 log((|z|+eps)^2) and F2 with (1 - theta);
/// F1 + F2 equals |z|^2 log((|z|+eps)^2) up to rounding.
std::pair<double, double> F_split(cplx z, RegularizationLevel eps);

/// Pointwise inequality oracles.  Each returns both sides so that
/// failures are diagnosable and envelope constants can be fitted.
struct TwoSided {
    double lhs;
    double rhs;
    bool holds;
};

/// |Im (u log(|u|+eps) - v log(|v|+mu)) (conj u - conj v)|
///   <= |u - v|^2 + |eps - mu| |u - v|,
/// checked with additive slack 1e-12 * (1 + rhs).
TwoSided check_log_lipschitz(cplx u, cplx v, double eps, double mu);

struct GrowthSides {
    double lhs;
    double rhs;
    double ratio;  // lhs / rhs, 0 at the origin by convention
};

/// lhs = |z log(|z|^2)| against rhs = |z|^(1-delta) + |z|^(1+delta).
GrowthSides check_log_growth(cplx z, double delta);

struct HolderSides {
    double lhs;
    double bracket;  // eps + |u-v| + (1 + |u|^(1-a) log+|u| + |v|^(1-a) log+|v|) |u-v|^a
};

/// Modulus-of-continuity bracket for v log(|v|+eps) - u log|u|.
HolderSides check_holder_log(cplx u, cplx v, double eps, double a);

}  // namespace lfse
