#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "lfse/grid.hpp"
#include "lfse/observables.hpp"
#include "lfse/rng.hpp"

using namespace lfse;
using std::numbers::pi;

namespace {

ComplexField random_field(const Grid& g, std::uint64_t seed) {
    Rng rng(seed);
    ComplexField u = make_zero_field(g);
    for (cplx& v : u.values) v = rng.complex_normal();
    return u;
}

}  // namespace

TEST_CASE("mass") {
    const Grid g = make_grid(1, 8, 8.0);
    CHECK(mass(make_zero_field(g)) == 0.0);
    const ComplexField ones = sample(g, [](std::span<const double>) { return cplx{1.0, 0.0}; });
    CHECK(mass(ones) == doctest::Approx(8.0).epsilon(1e-15));

    const Grid g2 = make_grid(1, 128, 16.0);
    const ComplexField u = random_field(g2, 1);
    const ComplexField v = linear_propagator(u, FractionalOrder(0.4), 0.9);
    CHECK(std::abs(mass(v) - mass(u)) < 1e-13 * mass(u));
}

TEST_CASE("momentum") {
    const Grid g = make_grid(1, 128, 16.0);
    const ComplexField re =
        sample(g, [](std::span<const double> x) -> cplx { return std::exp(-x[0] * x[0] / 4.0); });
    CHECK(std::abs(momentum(re)[0]) < 1e-12);

    const double rho = 2.25;
    const int m0 = 4;
    const double k0 = 2.0 * pi * m0 / g.L;
    const ComplexField pw = sample(g, [&](std::span<const double> x) {
        return std::sqrt(rho) * std::exp(cplx{0.0, k0 * x[0]});
    });
    CHECK(momentum(pw)[0] == doctest::Approx(rho * k0 * g.L).epsilon(1e-12));

    // constant-modulus state: the phase flow shifts the global phase only
    const ComplexField rotated = nonlinear_phase_flow(pw, CouplingConstant(1.5),
                                                      RegularizationLevel(0.2), 0.3);
    CHECK(momentum(rotated)[0] == doctest::Approx(momentum(pw)[0]).epsilon(1e-12));

    // free flow moves phases only in Fourier space, so J is untouched
    Rng rng(21);
    ComplexField mixed = make_zero_field(g);
    for (cplx& v : mixed.values) v = rng.complex_normal();
    const double j0 = momentum(mixed)[0];
    const double j1 = momentum(linear_propagator(mixed, FractionalOrder(0.5), 0.7))[0];
    CHECK(std::abs(j1 - j0) <= 1e-13 * std::abs(j0));
}

TEST_CASE("momentum d=2 vector") {
    const Grid g = make_grid(2, 32, 12.0);
    const double kx = 2.0 * pi * 2.0 / g.L, ky = 2.0 * pi * 5.0 / g.L;
    const ComplexField pw = sample(g, [&](std::span<const double> x) {
        return std::exp(cplx{0.0, kx * x[0] + ky * x[1]});
    });
    const auto J = momentum(pw);
    const double measure = g.L * g.L;
    CHECK(J[0] == doctest::Approx(kx * measure).epsilon(1e-12));
    CHECK(J[1] == doctest::Approx(ky * measure).epsilon(1e-12));
}

TEST_CASE("energy") {
    const Grid g = make_grid(1, 64, 8.0);
    const FractionalOrder s(0.5);
    CHECK(energy(make_zero_field(g), CouplingConstant(1.0), s) == 0.0);

    // lambda = 0: pure kinetic part
    const ComplexField u = random_field(g, 2);
    const double kin = energy(u, CouplingConstant(0.0), s);
    const double semin = hs_seminorm(u, s);
    CHECK(kin == doctest::Approx(0.5 * semin * semin).epsilon(1e-13));

    // unit-modulus constant: no kinetic part, potential = (lambda/2) L (0 - 1)
    const ComplexField ones = sample(g, [](std::span<const double>) { return cplx{1.0, 0.0}; });
    const double lam = -0.7;
    CHECK(energy(ones, CouplingConstant(lam), s) ==
          doctest::Approx(-lam / 2.0 * g.L).epsilon(1e-13));
}

TEST_CASE("energy_eps") {
    const Grid g = make_grid(1, 64, 8.0);
    const FractionalOrder s(0.5);
    CHECK(energy_eps(make_zero_field(g), CouplingConstant(1.0), s, RegularizationLevel(0.3)) ==
          0.0);

    const ComplexField u = random_field(g, 3);
    CHECK(energy_eps(u, CouplingConstant(0.0), s, RegularizationLevel(0.3)) ==
          doctest::Approx(energy(u, CouplingConstant(0.0), s)).epsilon(1e-13));

    // eps = 0 reduces algebraically to the plain energy
    for (std::uint64_t seed = 10; seed < 15; ++seed) {
        const ComplexField w = random_field(g, seed);
        const double a = energy_eps(w, CouplingConstant(-1.2), s, RegularizationLevel(0.0));
        const double b = energy(w, CouplingConstant(-1.2), s);
        CHECK(std::abs(a - b) < 1e-12 * (1.0 + std::abs(b)));
    }

    // monotone in eps, direction set by the sign of lambda
    const ComplexField w = random_field(g, 20);
    for (double lam : {-1.0, 1.0}) {
        double prev = energy_eps(w, CouplingConstant(lam), s, RegularizationLevel(0.0));
        for (double e : {0.01, 0.05, 0.1, 0.3}) {
            const double cur = energy_eps(w, CouplingConstant(lam), s, RegularizationLevel(e));
            if (lam > 0)
                CHECK(cur >= prev - 1e-12);
            else
                CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("seminorms and weighted norms") {
    const Grid g = make_grid(1, 128, 16.0);
    const FractionalOrder s(0.5);
    const ComplexField ones = sample(g, [](std::span<const double>) { return cplx{1.0, 0.0}; });
    CHECK(hs_seminorm(ones, s) < 1e-14);
    CHECK(h1_seminorm(ones) < 1e-14);
    CHECK(w2_defect(ones) == 0.0);

    const int m0 = 6;
    const double k0 = 2.0 * pi * m0 / g.L;
    const ComplexField pw =
        sample(g, [&](std::span<const double> x) { return std::exp(cplx{0.0, k0 * x[0]}); });
    CHECK(hs_seminorm(pw, s) ==
          doctest::Approx(std::pow(k0, s.s) * std::sqrt(mass(pw))).epsilon(1e-12));
    CHECK(h1_seminorm(pw) == doctest::Approx(k0 * std::sqrt(mass(pw))).epsilon(1e-12));

    const ComplexField u = random_field(g, 4);
    CHECK(weighted_norm(u, MomentOrder(0.0)) == doctest::Approx(l2_norm(u)).epsilon(1e-15));
    CHECK(weighted_norm(u, MomentOrder(0.5)) >= l2_norm(u));

    // w1 diagnostic equals the direct quadrature of | |u|^2 log|u|^2 |
    double direct = 0.0;
    for (const cplx& v : u.values) {
        const double a2 = std::norm(v);
        if (std::abs(v) >= 1e-300) direct += std::abs(a2 * 2.0 * std::log(std::abs(v)));
    }
    direct *= g.h;
    CHECK(w1_diagnostic(u) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("observable CSV row layout") {
    CHECK(observable_csv_header() ==
          "t,mass,momentum_x,momentum_y,energy,energy_eps,l2,hs_semi,h1_semi,weighted_alpha,"
          "w2_defect");

    ObservableRecord rec;
    rec.t = 0.5;
    rec.mass = 2.0;
    rec.momentum = {0.25, 0.0};
    rec.energy = -1.0;
    rec.energy_eps = -0.75;
    rec.l2 = std::sqrt(2.0);
    rec.hs_semi = 3.0;

    const std::string row = observable_csv_row(rec, 1);
    // momentum_y and the trailing optionals stay empty for d = 1
    CHECK(row == "0.5,2,0.25,,-1,-0.75," + std::string("1.4142135623730951") + ",3,,,");

    rec.h1_semi = 4.0;
    rec.weighted_alpha = 5.0;
    rec.w2_defect = 6.0;
    CHECK(observable_csv_row(rec, 1) ==
          "0.5,2,0.25,,-1,-0.75,1.4142135623730951,3,4,5,6");

    // %.17g keeps doubles bit-exact through the text round trip
    rec.mass = 0.1 + 0.2;
    const std::string row2 = observable_csv_row(rec, 1);
    double parsed = 0.0;
    std::sscanf(row2.c_str(), "%*[^,],%lf", &parsed);
    CHECK(parsed == rec.mass);
}
