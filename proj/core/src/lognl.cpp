#include "lfse/lognl.hpp"

#include <algorithm>
#include <cmath>

#include "lfse/cutoff.hpp"

namespace lfse {

double log_sq_modulus(cplx z) {
    const double a = std::abs(z);
    if (a < kAmplitudeFloor) return 0.0;
    return 2.0 * std::log(a);
}

cplx g_eps(cplx z, RegularizationLevel eps) {
    const double a = std::abs(z) + eps.eps;
    if (a < kAmplitudeFloor) return {0.0, 0.0};
    return 2.0 * z * std::log(a);
}

double mu_eps(double sigma, RegularizationLevel eps) {
    if (sigma < 0.0) throw std::invalid_argument("mu_eps: sigma must be >= 0");
    if (sigma == 0.0) return 0.0;
    if (eps.eps == 0.0) return sigma * sigma;

    const double e = eps.eps;
    const double r = sigma / e;
    if (r >= 0.5)
        return sigma * sigma - 2.0 * e * sigma + 2.0 * e * e * std::log1p(r);

    // r^2 - 2r + 2 log(1+r) cancels to O(r^3); sum the tail of the log
    // series instead: 2 * sum_{j>=3} (-1)^(j+1) r^j / j.
    double acc = 0.0;
    double rj = r * r * r;
    double sign = 1.0;
    for (int j = 3; j < 80; ++j) {
        const double term = sign * rj / j;
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc)) break;
        rj *= r;
        sign = -sign;
    }
    return 2.0 * e * e * acc;
}

ComplexField nonlinear_phase_flow(const ComplexField& u, CouplingConstant lambda,
                                  RegularizationLevel eps, double dt) {
    ComplexField out = u;
    const double c = -2.0 * lambda.lambda * dt;
    for (cplx& v : out.values) {
        const double a = std::abs(v) + eps.eps;
        if (a < kAmplitudeFloor) continue;
        const double phase = c * std::log(a);
        v *= cplx{std::cos(phase), std::sin(phase)};
    }
    return out;
}

ComplexField g_eps_field(const ComplexField& u, RegularizationLevel eps) {
    ComplexField out = u;
    for (cplx& v : out.values) v = g_eps(v, eps);
    return out;
}

std::pair<double, double> F_split(cplx z, RegularizationLevel eps) {
    const double a = std::abs(z);
    const double ae = a + eps.eps;
    double common = 0.0;
    if (ae >= kAmplitudeFloor) common = a * a * 2.0 * std::log(ae);
    const double th = theta_cutoff(z);
    return {th * common, (1.0 - th) * common};
}

TwoSided check_log_lipschitz(cplx u, cplx v, double eps, double mu) {
    if (eps < 0.0 || mu < 0.0)
        throw std::invalid_argument("check_log_lipschitz: eps, mu must be >= 0");
    auto xlog = [](cplx z, double e) -> cplx {
        const double a = std::abs(z) + e;
        if (a < kAmplitudeFloor) return {0.0, 0.0};
        return z * std::log(a);
    };
    const cplx diff = std::conj(u) - std::conj(v);
    const double lhs = std::abs(std::imag((xlog(u, eps) - xlog(v, mu)) * diff));
    const double duv = std::abs(u - v);
    const double rhs = duv * duv + std::abs(eps - mu) * duv;
    return {lhs, rhs, lhs <= rhs + 1e-12 * (1.0 + rhs)};
}

GrowthSides check_log_growth(cplx z, double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("check_log_growth: delta must lie in (0, 1)");
    const double a = std::abs(z);
    const double lhs = a < kAmplitudeFloor ? 0.0 : std::abs(a * 2.0 * std::log(a));
    const double rhs = std::pow(a, 1.0 - delta) + std::pow(a, 1.0 + delta);
    const double ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    return {lhs, rhs, ratio};
}

HolderSides check_holder_log(cplx u, cplx v, double eps, double a) {
    if (!(eps >= 0.0 && eps < 1.0) || !(a > 0.0 && a < 1.0))
        throw std::invalid_argument("check_holder_log: need eps in [0,1), a in (0,1)");
    auto vlog = [](cplx z, double e) -> cplx {
        const double m = std::abs(z) + e;
        if (m < kAmplitudeFloor) return {0.0, 0.0};
        return z * std::log(m);
    };
    const double lhs = std::abs(vlog(v, eps) - vlog(u, 0.0));
    auto log_plus = [](double x) { return x > 1.0 ? std::log(x) : 0.0; };
    const double au = std::abs(u), av = std::abs(v);
    const double duv = std::abs(u - v);
    const double bracket =
        eps + duv +
        (1.0 + std::pow(au, 1.0 - a) * log_plus(au) + std::pow(av, 1.0 - a) * log_plus(av)) *
            std::pow(duv, a);
    return {lhs, bracket};
}

}  // namespace lfse
