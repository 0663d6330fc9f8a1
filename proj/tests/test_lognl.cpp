#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lfse/cutoff.hpp"
#include "lfse/grid.hpp"
#include "lfse/lognl.hpp"
#include "lfse/quadrature.hpp"
#include "lfse/rng.hpp"

using namespace lfse;
using std::numbers::pi;

namespace {

cplx random_point(Rng& rng, double max_mod) {
    const double r = max_mod * rng.uniform();
    const double t = 2.0 * pi * rng.uniform();
    return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace

TEST_CASE("g_eps point values") {
    CHECK(g_eps(cplx{0.0, 0.0}, RegularizationLevel(0.1)) == cplx{0.0, 0.0});
    CHECK(g_eps(cplx{1.0, 0.0}, RegularizationLevel(0.0)) == cplx{0.0, 0.0});
    const double r = std::exp(0.5);
    const cplx out = g_eps(cplx{r, 0.0}, RegularizationLevel(0.0));
    CHECK(out.real() == doctest::Approx(r).epsilon(1e-14));
    CHECK(out.imag() == 0.0);
    // vacuum limit: z log|z| -> 0
    CHECK(g_eps(cplx{0.0, 0.0}, RegularizationLevel(0.0)) == cplx{0.0, 0.0});
}

TEST_CASE("mu_eps closed form") {
    CHECK(mu_eps(3.0, RegularizationLevel(0.0)) == 9.0);
    CHECK(mu_eps(0.0, RegularizationLevel(0.3)) == 0.0);
    CHECK_THROWS_AS(mu_eps(-1.0, RegularizationLevel(0.1)), std::invalid_argument);

    // quadrature oracle for the defining integral, run across both branches
    // of the closed form (plain and series)
    for (auto [sigma, eps] : {std::pair{1.0, 0.1}, {2.5, 0.49}, {1e-6, 1.0}, {4e-3, 0.3},
                              {7.0, 1e-5}, {0.049, 0.1}}) {
        const double closed = mu_eps(sigma, RegularizationLevel(eps));
        auto integrand = [eps = eps](double t) { return 2.0 * t * t / (t + eps); };
        const double ref = adaptive_simpson(integrand, 0.0, sigma, 1e-13 * std::abs(closed));
        CHECK(std::abs(closed - ref) < 1e-10 * std::abs(ref));
    }

    // monotone in sigma, bounded by sigma^2
    const RegularizationLevel eps(0.2);
    double prev = 0.0;
    for (double sigma : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const double v = mu_eps(sigma, eps);
        CHECK(v >= prev);
        CHECK(v <= sigma * sigma);
        prev = v;
    }
}

TEST_CASE("nonlinear phase flow is a pure modulus-preserving rotation") {
    const Grid g = make_grid(1, 64, 16.0);
    Rng rng(1);
    ComplexField u = make_zero_field(g);
    for (cplx& v : u.values) v = random_point(rng, 3.0);
    const CouplingConstant lam(-1.0);
    const RegularizationLevel eps(0.1);

    // dt = 0 is the identity, exactly
    const ComplexField id = nonlinear_phase_flow(u, lam, eps, 0.0);
    for (std::size_t i = 0; i < u.values.size(); ++i) CHECK(id.values[i] == u.values[i]);

    const ComplexField v = nonlinear_phase_flow(u, lam, eps, 0.3);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double a = std::abs(u.values[i]), b = std::abs(v.values[i]);
        CHECK(std::abs(a - b) <= 1e-15 * (a + 1e-300));
    }

    // exactly unit modulus with eps = 0: log 1 = 0 keeps the state fixed
    ComplexField units = make_zero_field(g);
    for (int j = 0; j < g.n; ++j) units.values[j] = (j % 2 ? cplx{0.0, 1.0} : cplx{-1.0, 0.0});
    const ComplexField fixed = nonlinear_phase_flow(units, lam, RegularizationLevel(0.0), 0.7);
    for (int j = 0; j < g.n; ++j) CHECK(fixed.values[j] == units.values[j]);

    // group property in dt at fixed modulus
    const ComplexField two_steps =
        nonlinear_phase_flow(nonlinear_phase_flow(u, lam, eps, 0.2), lam, eps, 0.5);
    const ComplexField one_step = nonlinear_phase_flow(u, lam, eps, 0.7);
    for (std::size_t i = 0; i < u.values.size(); ++i)
        CHECK(std::abs(two_steps.values[i] - one_step.values[i]) <=
              1e-13 * (std::abs(u.values[i]) + 1e-300));

    // an exact zero stays an exact zero (no NaN from log 0)
    ComplexField withzero = u;
    withzero.values[5] = cplx{0.0, 0.0};
    const ComplexField flowed = nonlinear_phase_flow(withzero, lam, RegularizationLevel(0.0), 0.4);
    CHECK(flowed.values[5] == cplx{0.0, 0.0});
    CHECK(all_finite(flowed));
}

TEST_CASE("theta cutoff: plateaus, monotonicity, C1 joins") {
    CHECK(theta_cutoff(cplx{0.2, 0.0}) == 1.0);
    CHECK(theta_cutoff(cplx{0.0, 0.21}) == 1.0);
    CHECK(theta_cutoff(cplx{0.25, 0.0}) == 1.0);
    CHECK(theta_cutoff(cplx{0.6, 0.0}) == 0.0);
    CHECK(theta_cutoff(cplx{0.5, 0.0}) == 0.0);
    const double mid = theta_cutoff(cplx{0.375, 0.0});
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);

    double prev = 1.0;
    for (double r = 0.25; r <= 0.5; r += 0.01) {
        const double v = theta_cutoff(cplx{r, 0.0});
        CHECK(v <= prev + 1e-15);
        prev = v;
    }

    // one-sided difference quotients shrink towards the joins:
    // the profile is C^2, so theta' vanishes at r = 1/4 and r = 1/2
    for (double r0 : {0.25, 0.5}) {
        for (double h : {1e-2, 1e-3, 1e-4}) {
            const double slope =
                (theta_cutoff(cplx{r0 + h, 0.0}) - theta_cutoff(cplx{r0 - h, 0.0})) / (2.0 * h);
            CHECK(std::abs(slope) < 200.0 * h);  // O(h) join, quintic profile gives O(h^2)
        }
    }
}

TEST_CASE("F_split regions and sum identity") {
    const RegularizationLevel eps(0.2);
    {
        const auto [f1, f2] = F_split(cplx{0.2, 0.0}, eps);
        CHECK(f2 == 0.0);
        CHECK(f1 != 0.0);
    }
    {
        const auto [f1, f2] = F_split(cplx{0.0, -0.9}, eps);
        CHECK(f1 == 0.0);
        CHECK(f2 != 0.0);
    }
    {
        const auto [f1, f2] = F_split(cplx{0.0, 0.0}, RegularizationLevel(0.0));
        CHECK(f1 == 0.0);
        CHECK(f2 == 0.0);
    }

    Rng rng(2);
    for (int i = 0; i < 100000; ++i) {
        const cplx z = random_point(rng, 2.0);
        const double e = 0.5 * rng.uniform();
        const auto [f1, f2] = F_split(z, RegularizationLevel(e));
        const double a = std::abs(z);
        const double whole = (a + e) >= kAmplitudeFloor ? a * a * 2.0 * std::log(a + e) : 0.0;
        CHECK(std::abs(f1 + f2 - whole) <= 1e-13 * (1.0 + std::abs(whole)));
    }
}

TEST_CASE("log-lipschitz oracle") {
    {
        const TwoSided r = check_log_lipschitz(cplx{1.3, -0.4}, cplx{1.3, -0.4}, 0.2, 0.2);
        CHECK(r.lhs == 0.0);
        CHECK(r.holds);
    }
    {
        // v = 0, mu = 0: the left side collapses since u conj(u) is real
        const TwoSided r = check_log_lipschitz(cplx{0.7, 1.1}, cplx{0.0, 0.0}, 0.3, 0.0);
        CHECK(r.lhs == 0.0);
        CHECK(r.holds);
    }
    Rng rng(3);
    int violations = 0;
    for (int i = 0; i < 100000; ++i) {
        const cplx u = random_point(rng, 10.0);
        const cplx v = random_point(rng, 10.0);
        if (!check_log_lipschitz(u, v, rng.uniform(), rng.uniform()).holds) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("log growth envelope") {
    CHECK(check_log_growth(cplx{1.0, 0.0}, 0.5).lhs == 0.0);
    const GrowthSides zero = check_log_growth(cplx{0.0, 0.0}, 0.5);
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    CHECK(zero.ratio == 0.0);
    CHECK_THROWS_AS(check_log_growth(cplx{1.0, 0.0}, 1.5), std::invalid_argument);

    // the fitted constant over a dense radius scan stays small and finite
    double c = 0.0;
    for (int i = 0; i < 200000; ++i) {
        const double r = 1e-8 * std::exp(std::log(1e11) * i / 199999.0);
        c = std::max(c, check_log_growth(cplx{r, 0.0}, 0.5).ratio);
    }
    CHECK(c < 5.0);
    CHECK(c > 1.0);
}

TEST_CASE("holder-log oracle") {
    {
        const HolderSides r = check_holder_log(cplx{0.9, 0.1}, cplx{0.9, 0.1}, 0.0, 0.5);
        CHECK(r.lhs == 0.0);
    }
    {
        const HolderSides r = check_holder_log(cplx{0.0, 0.0}, cplx{0.0, 0.0}, 0.25, 0.5);
        CHECK(r.lhs == 0.0);
        CHECK(r.bracket == 0.25);
    }
    Rng rng(4);
    double c = 0.0;
    for (int i = 0; i < 50000; ++i) {
        const cplx u = random_point(rng, 10.0);
        const cplx v = random_point(rng, 10.0);
        const HolderSides r = check_holder_log(u, v, 0.999 * rng.uniform(), 0.5);
        if (r.bracket > 0.0) c = std::max(c, r.lhs / r.bracket);
    }
    CHECK(std::isfinite(c));
    CHECK(c > 0.0);
}

TEST_CASE("zeta cutoff plateaus are exact") {
    const CutoffZeta zeta(3.0);
    CHECK(zeta(0.0) == 1.0);
    CHECK(zeta(3.0) == 1.0);
    CHECK(zeta(-2.5) == 1.0);
    CHECK(zeta(6.0) == 0.0);
    CHECK(zeta(8.5) == 0.0);
    const double mid = zeta(4.5);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
    CHECK_THROWS_AS(CutoffZeta(0.0), std::invalid_argument);

    const Grid g = make_grid(1, 64, 32.0);
    const ComplexField zf = zeta_field(g, zeta);
    for (int j = 0; j < g.n; ++j) {
        const double r = std::abs(g.coords[j]);
        if (r <= 3.0) CHECK(zf.values[j] == cplx{1.0, 0.0});
        if (r >= 6.0) CHECK(zf.values[j] == cplx{0.0, 0.0});
    }
}
