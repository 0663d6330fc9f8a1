#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lfse/fractional.hpp"
#include "lfse/grid.hpp"
#include "lfse/lognl.hpp"

namespace lfse {

double mass(const ComplexField& u);

/// J = Im integral conj(u) grad u; the real part of the defining integral
/// is verified to be below 1e-10 * ||u|| ||grad u|| before being dropped.
std::array<double, 2> momentum(const ComplexField& u);

/// E = 1/2 ||(-Delta)^{s/2} u||^2 + (lambda/2) int |u|^2vv (log|u|^2 - 1).
double energy(const ComplexField& u, CouplingConstant lambda, FractionalOrder s);

/// Regularized energy: kinetic term plus
/// (lambda/2) int |u|^2 log((|u|+eps)^2) - (lambda/2) int mu_eps(|u|).
/// Coincides with energy() at eps = 0.
double energy_eps(const ComplexField& u, CouplingConstant lambda, FractionalOrder s,
                  RegularizationLevel eps);

/// ||(-Delta)^{s/2} u||_{L^2}, computed spectrally.
double hs_seminorm(const ComplexField& u, FractionalOrder s);

/// ||grad u||_{L^2}, computed spectrally.
double h1_seminorm(const ComplexField& u);

/// ||<x>^alpha u||_{L^2}.
double weighted_norm(const ComplexField& u, MomentOrder alpha);

/// ||u log|u|^2||_{L^2} with the vacuum-floor convention.
double w2_defect(const ComplexField& u);

/// int | |u|^2 log|u|^2 |, reported as the energy-space diagnostic.
double w1_diagnostic(const ComplexField& u);

/// One sampled row of monitored quantities.  mass = l2^2.
struct ObservableRecord {
    double t = 0.0;
    double mass = 0.0;
    std::array<double, 2> momentum = {0.0, 0.0};
    double energy = 0.0;
    double energy_eps = 0.0;
    double l2 = 0.0;
    double hs_semi = 0.0;
    std::optional<double> h1_semi;
    std::optional<double> weighted_alpha;
    std::optional<double> w2_defect;
};

/// Fixed CSV column order; missing optionals serialize as empty cells.
std::string observable_csv_header();
std::string observable_csv_row(const ObservableRecord& rec, int d);

using ObservableSeries = std::vector<ObservableRecord>;

void write_observable_csv(const std::string& path, const ObservableSeries& series, int d);

}  // namespace lfse
