#include "lfse/integrator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lfse/initial_data.hpp"

namespace lfse {

Scheme scheme_from_string(const std::string& name) {
    if (name == "lie") return Scheme::lie;
    if (name == "strang") return Scheme::strang;
    throw std::invalid_argument("unknown scheme '" + name + "' (expected lie|strang)");
}

std::string to_string(Scheme scheme) { return scheme == Scheme::lie ? "lie" : "strang"; }

SimParams::SimParams(FractionalOrder s_, CouplingConstant lambda_, RegularizationLevel eps_,
                     double dt_, double T_, Scheme scheme_, int sample_every_)
    : s(s_), lambda(lambda_), eps(eps_), dt(dt_), T(T_), scheme(scheme_),
      sample_every(sample_every_) {
    if (!(dt > 0.0) || !(T > 0.0)) throw std::invalid_argument("SimParams: dt, T must be > 0");
    if (dt > T * (1.0 + 1e-12)) throw std::invalid_argument("SimParams: dt must be <= T");
    const double ratio = T / dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9)
        throw std::invalid_argument("SimParams: T/dt must be an integer step count");
    if (sample_every < 1) throw std::invalid_argument("SimParams: sample_every must be >= 1");
}

int SimParams::step_count() const { return int(std::llround(T / dt)); }

ComplexField step(const ComplexField& u, const SimParams& p) {
    if (p.scheme == Scheme::strang) {
        ComplexField v = nonlinear_phase_flow(u, p.lambda, p.eps, p.dt / 2.0);
        v = linear_propagator(v, p.s, p.dt);
        return nonlinear_phase_flow(v, p.lambda, p.eps, p.dt / 2.0);
    }
    ComplexField v = nonlinear_phase_flow(u, p.lambda, p.eps, p.dt);
    return linear_propagator(v, p.s, p.dt);
}

ComplexField time_derivative(const ComplexField& u, const SimParams& p) {
    ComplexField lin = frac_laplacian(u, p.s);
    const ComplexField nl = g_eps_field(u, p.eps);
    for (std::size_t i = 0; i < lin.values.size(); ++i) {
        const cplx rhs = lin.values[i] + p.lambda.lambda * nl.values[i];
        lin.values[i] = cplx{rhs.imag(), -rhs.real()};  // multiply by -i
    }
    return lin;
}

double spectral_tail_fraction(const ComplexField& u) {
    const SpectralField spec = forward(u);
    const Grid& g = u.grid;
    const double cut = 0.5 * std::numbers::pi * g.n / g.L;  // half the axis Nyquist
    double tail = 0.0, total = 0.0;
    if (g.d == 1) {
        for (int j = 0; j < g.n; ++j) {
            const double e = std::norm(spec.modes[j]);
            total += e;
            if (std::abs(g.wavenumbers[j]) >= cut) tail += e;
        }
    } else {
        for (int ix = 0; ix < g.n; ++ix)
            for (int iy = 0; iy < g.n; ++iy) {
                const double e = std::norm(spec.modes[g.index(ix, iy)]);
                total += e;
                if (std::max(std::abs(g.wavenumbers[ix]), std::abs(g.wavenumbers[iy])) >= cut)
                    tail += e;
            }
    }
    return total > 0.0 ? tail / total : 0.0;
}

namespace {

ObservableRecord make_record(const ComplexField& u, const SimParams& p, double t,
                             const ObservableOptions& opts) {
    ObservableRecord rec;
    rec.t = t;
    rec.mass = mass(u);
    rec.momentum = momentum(u);
    rec.energy = energy(u, p.lambda, p.s);
    rec.energy_eps = energy_eps(u, p.lambda, p.s, p.eps);
    rec.l2 = std::sqrt(rec.mass);
    rec.hs_semi = hs_seminorm(u, p.s);
    if (opts.with_h1) rec.h1_semi = h1_seminorm(u);
    if (opts.weighted) rec.weighted_alpha = weighted_norm(u, *opts.weighted);
    if (opts.with_w2) rec.w2_defect = w2_defect(u);
    return rec;
}

}  // namespace

Trajectory evolve(const ComplexField& phi, const SimParams& p, const ObservableOptions& opts) {
    if (!all_finite(phi)) throw std::runtime_error("evolve: non-finite initial datum");
    if (!boundary_guard_ok(phi))
        throw std::runtime_error(
            "evolve: boundary-amplitude guard failed (datum not negligible at the box edge; "
            "increase L)");

    Trajectory traj;
    const int nsteps = p.step_count();
    traj.times.reserve(nsteps / p.sample_every + 2);

    auto take_sample = [&](const ComplexField& u, double t) {
        traj.times.push_back(t);
        traj.states.push_back(u);
        traj.series.push_back(make_record(u, p, t, opts));
        traj.max_tail_fraction = std::max(traj.max_tail_fraction, spectral_tail_fraction(u));
    };

    ComplexField u = phi;
    take_sample(u, 0.0);
    for (int i = 0; i < nsteps; ++i) {
        u = step(u, p);
        if (!all_finite(u)) {
            std::ostringstream msg;
            msg << "evolve: non-finite state after step " << i + 1 << " (t = " << (i + 1) * p.dt
                << ")";
            throw std::runtime_error(msg.str());
        }
        if ((i + 1) % p.sample_every == 0 || i + 1 == nsteps) take_sample(u, (i + 1) * p.dt);
    }
    return traj;
}

OrderResult order_test(const ComplexField& phi, const SimParams& p, int levels) {
    if (levels < 3) throw std::invalid_argument("order_test: levels must be >= 3");

    auto run_final = [&phi, &p](double dt) {
        SimParams q(p.s, p.lambda, p.eps, dt, p.T, p.scheme, 1 << 30);
        ComplexField u = phi;
        const int nsteps = q.step_count();
        for (int i = 0; i < nsteps; ++i) u = step(u, q);
        return u;
    };

    // Reference two extra halvings below the finest measured level, so the
    // reference error does not contaminate the fitted slope.
    const double ref_dt = p.dt / double(1 << (levels + 2));
    const ComplexField ref = run_final(ref_dt);
    const double ref_norm = l2_norm(ref);

    OrderResult res;
    for (int i = 0; i < levels; ++i) {
        const double dt = p.dt / double(1 << i);
        ComplexField u = run_final(dt);
        for (std::size_t j = 0; j < u.values.size(); ++j) u.values[j] -= ref.values[j];
        res.dts.push_back(dt);
        res.errors.push_back(l2_norm(u));
    }

    res.exact = true;
    for (double e : res.errors)
        if (e > 1e-12 * std::max(ref_norm, 1e-300)) res.exact = false;
    if (res.exact) return res;

    for (int i = 0; i + 1 < levels; ++i)
        res.pair_orders.push_back(std::log2(res.errors[i] / res.errors[i + 1]));

    // Least-squares slope of log(err) against log(dt).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < levels; ++i) {
        const double x = std::log(res.dts[i]), y = std::log(res.errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    res.fitted_order = (levels * sxy - sx * sy) / (levels * sxx - sx * sx);
    return res;
}

}  // namespace lfse
