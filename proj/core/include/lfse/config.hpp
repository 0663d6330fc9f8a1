#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfse/initial_data.hpp"
#include "lfse/integrator.hpp"

namespace lfse {

/// Parameter sweeps; empty vectors mean "use the experiment's default".
struct Sweeps {
    std::vector<double> eps;
    std::vector<double> s;
    std::vector<double> alpha;
    std::vector<double> R;
};

/// Multiplicative slack absorbed by the bound assertions (discretization
/// error allowance on estimates that are exact for the PDE).
struct Slack {
    double growth = 0.05;
    double moment = 0.10;
};

struct ExperimentConfig {
    std::string name;
    int grid_d = 1;
    int grid_n = 256;
    double grid_L = 24.0;

    double s = 0.5;
    double lambda = -1.0;
    double eps = 0.1;
    double dt = 0.01;
    double T = 1.0;
    std::string scheme = "strang";
    int sample_every = 1;

    DatumSpec initial_datum;
    Sweeps sweeps;
    Slack slack;

    std::string output_dir = "out";
    std::uint64_t seed = 20240601;

    Grid make_grid_() const;
    SimParams make_params() const;
};

/// Strict parse: every key must be known, nesting mirrors the field
/// structure above.  Throws std::runtime_error naming any unknown key.
ExperimentConfig parse_config_text(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

/// Built-in defaults for a named experiment.
ExperimentConfig default_config(const std::string& experiment_name);

/// One-line JSON echo of the effective configuration.
std::string config_echo(const ExperimentConfig& cfg);

}  // namespace lfse
