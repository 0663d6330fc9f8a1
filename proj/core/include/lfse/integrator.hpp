#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfse/fractional.hpp"
#include "lfse/grid.hpp"
#include "lfse/lognl.hpp"
#include "lfse/observables.hpp"

namespace lfse {

enum class Scheme { lie, strang };

Scheme scheme_from_string(const std::string& name);
std::string to_string(Scheme scheme);

/// Parameters of one evolution run.
struct SimParams {
    FractionalOrder s;
    CouplingConstant lambda;
    RegularizationLevel eps;
    double dt;
    double T;
    Scheme scheme = Scheme::strang;
    int sample_every = 1;

    SimParams(FractionalOrder s_, CouplingConstant lambda_, RegularizationLevel eps_,
              double dt_, double T_, Scheme scheme_ = Scheme::strang, int sample_every_ = 1);

    int step_count() const;
};

/// Which extra observables to evaluate at sample times.
struct ObservableOptions {
    bool with_h1 = true;
    bool with_w2 = false;
    std::optional<MomentOrder> weighted;
};

struct Trajectory {
    std::vector<double> times;        // sample timestamps, strictly increasing
    std::vector<ComplexField> states; // states at the sample times; first is the datum
    ObservableSeries series;
    /// Largest fraction of spectral mass found in the top octave of modes
    /// at any sample; resolution is adequate when this stays below 1e-8.
    double max_tail_fraction = 0.0;
};

/// One time step of the split flow.
///   strang: phase(dt/2) . linear(dt) . phase(dt/2)
///   lie:    linear(dt) . phase(dt)
/// With lambda = 0 both reduce exactly to the linear propagator.
ComplexField step(const ComplexField& u, const SimParams& p);

/// round(T/dt) steps from the datum, sampling observables every
/// sample_every steps (the datum and the final state are always sampled).
/// Preconditions: the boundary-amplitude guard holds on phi (max |phi| on
/// the outermost shell below 1e-10 of the peak).  A non-finite state
/// aborts with the offending step index.
Trajectory evolve(const ComplexField& phi, const SimParams& p,
                  const ObservableOptions& opts = {});

/// Right-hand side of the evolution written as du/dt:
///   -i ( (-Delta)^s u + lambda g_eps(u) ).
ComplexField time_derivative(const ComplexField& u, const SimParams& p);

/// Fraction of spectral mass carried by modes in the top octave
/// (|k|_inf >= half the axis Nyquist).
double spectral_tail_fraction(const ComplexField& u);

struct OrderResult {
    bool exact = false;          // errors at machine floor (e.g. lambda = 0)
    double fitted_order = 0.0;   // least-squares slope of log err vs log dt
    std::vector<double> dts;
    std::vector<double> errors;
    std::vector<double> pair_orders;  // log2 of successive error ratios
};

/// Step-halving convergence measurement: runs at dt/2^i, i = 0..levels-1,
/// against a reference run of the same scheme at dt/2^(levels+2), and fits
/// the order from the L^2 errors at time T.  levels >= 3.
OrderResult order_test(const ComplexField& phi, const SimParams& p, int levels);

}  // namespace lfse
