#include "lfse/observables.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "lfse/cutoff.hpp"

namespace lfse {

namespace {

// Spectral sum h^d * sum w(|k|) |u_hat|^2 in a fixed deterministic order.
template <typename WeightFn>
double spectral_weighted_sum(const ComplexField& u, WeightFn&& w) {
    const SpectralField spec = forward(u);
    const Grid& g = u.grid;
    double acc = 0.0;
    if (g.d == 1) {
        for (int j = 0; j < g.n; ++j) acc += w(std::abs(g.wavenumbers[j])) * std::norm(spec.modes[j]);
    } else {
        for (int ix = 0; ix < g.n; ++ix)
            for (int iy = 0; iy < g.n; ++iy)
                acc += w(std::hypot(g.wavenumbers[ix], g.wavenumbers[iy])) *
                       std::norm(spec.modes[g.index(ix, iy)]);
    }
    return acc * g.cell_volume();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

double mass(const ComplexField& u) { return l2_norm_sq(u); }

std::array<double, 2> momentum(const ComplexField& u) {
    const Grid& g = u.grid;
    std::array<double, 2> J = {0.0, 0.0};
    const double unorm = l2_norm(u);
    for (int axis = 0; axis < g.d; ++axis) {
        const ComplexField grad = spectral_gradient(u, axis);
        const cplx integral = inner_product(grad, u);  // int conj(u) du/dx_a
        const double gate = 1e-10 * unorm * l2_norm(grad);
        if (std::abs(integral.real()) >= gate + 1e-300)
            throw std::runtime_error("momentum: defining integral has unexpected real part");
        J[axis] = integral.imag();
    }
    return J;
}

double hs_seminorm(const ComplexField& u, FractionalOrder s) {
    const double p = 2.0 * s.s;
    return std::sqrt(spectral_weighted_sum(u, [p](double k) { return std::pow(k, p); }));
}

double h1_seminorm(const ComplexField& u) {
    return std::sqrt(spectral_weighted_sum(u, [](double k) { return k * k; }));
}

double energy(const ComplexField& u, CouplingConstant lambda, FractionalOrder s) {
    const double kin = 0.5 * spectral_weighted_sum(u, [p = 2.0 * s.s](double k) { return std::pow(k, p); });
    double pot = 0.0;
    for (const cplx& v : u.values) {
        const double a2 = std::norm(v);
        if (std::abs(v) < kAmplitudeFloor) continue;  // integrand -> 0 at vacuum
        pot += a2 * (log_sq_modulus(v) - 1.0);
    }
    return kin + (lambda.lambda / 2.0) * pot * u.grid.cell_volume();
}

double energy_eps(const ComplexField& u, CouplingConstant lambda, FractionalOrder s,
                  RegularizationLevel eps) {
    const double kin = 0.5 * spectral_weighted_sum(u, [p = 2.0 * s.s](double k) { return std::pow(k, p); });
    double pot = 0.0, mu_sum = 0.0;
    for (const cplx& v : u.values) {
        const double a = std::abs(v);
        const double ae = a + eps.eps;
        if (ae >= kAmplitudeFloor) pot += a * a * 2.0 * std::log(ae);
        mu_sum += mu_eps(a, eps);
    }
    const double vol = u.grid.cell_volume();
    return kin + (lambda.lambda / 2.0) * (pot - mu_sum) * vol;
}

double weighted_norm(const ComplexField& u, MomentOrder alpha) {
    return l2_norm(weight_multiply(u, alpha));
}

double w2_defect(const ComplexField& u) {
    double acc = 0.0;
    for (const cplx& v : u.values) {
        const double l = log_sq_modulus(v);
        acc += std::norm(v) * l * l;
    }
    return std::sqrt(acc * u.grid.cell_volume());
}

double w1_diagnostic(const ComplexField& u) {
    double acc = 0.0;
    for (const cplx& v : u.values) {
        const auto [f1, f2] = F_split(v, RegularizationLevel(0.0));
        acc += std::abs(f1) + std::abs(f2);
    }
    return acc * u.grid.cell_volume();
}

std::string observable_csv_header() {
    return "t,mass,momentum_x,momentum_y,energy,energy_eps,l2,hs_semi,h1_semi,"
           "weighted_alpha,w2_defect";
}

std::string observable_csv_row(const ObservableRecord& rec, int d) {
    std::string row = fmt(rec.t);
    row += "," + fmt(rec.mass);
    row += "," + fmt(rec.momentum[0]);
    row += ",";
    if (d == 2) row += fmt(rec.momentum[1]);
    row += "," + fmt(rec.energy);
    row += "," + fmt(rec.energy_eps);
    row += "," + fmt(rec.l2);
    row += "," + fmt(rec.hs_semi);
    row += ",";
    if (rec.h1_semi) row += fmt(*rec.h1_semi);
    row += ",";
    if (rec.weighted_alpha) row += fmt(*rec.weighted_alpha);
    row += ",";
    if (rec.w2_defect) row += fmt(*rec.w2_defect);
    return row;
}

void write_observable_csv(const std::string& path, const ObservableSeries& series, int d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_observable_csv: cannot open " + path);
    out << observable_csv_header() << "\n";
    for (const ObservableRecord& rec : series) out << observable_csv_row(rec, d) << "\n";
}

}  // namespace lfse
