#include "lfse/config.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lfse {

using nlohmann::json;

namespace {

void require_known_keys(const json& obj, const std::set<std::string>& known,
                        const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw std::runtime_error("config: unknown key '" + where + it.key() + "'");
}

template <typename T>
void read_if(const json& obj, const char* key, T& out) {
    if (obj.contains(key)) out = obj.at(key).get<T>();
}

}  // namespace

Grid ExperimentConfig::make_grid_() const { return make_grid(grid_d, grid_n, grid_L); }

SimParams ExperimentConfig::make_params() const {
    return SimParams(FractionalOrder(s), CouplingConstant(lambda), RegularizationLevel(eps), dt,
                     T, scheme_from_string(scheme), sample_every);
}

ExperimentConfig parse_config_text(const std::string& json_text) {
    json root = json::parse(json_text);
    if (!root.is_object()) throw std::runtime_error("config: top level must be an object");
    require_known_keys(root,
                       {"name", "grid", "params", "initial_datum", "sweeps", "slack",
                        "output_dir", "seed"},
                       "");

    ExperimentConfig cfg;
    read_if(root, "name", cfg.name);
    read_if(root, "output_dir", cfg.output_dir);
    read_if(root, "seed", cfg.seed);

    if (root.contains("grid")) {
        const json& g = root.at("grid");
        require_known_keys(g, {"d", "n", "L"}, "grid.");
        read_if(g, "d", cfg.grid_d);
        read_if(g, "n", cfg.grid_n);
        read_if(g, "L", cfg.grid_L);
    }
    if (root.contains("params")) {
        const json& p = root.at("params");
        require_known_keys(p, {"s", "lambda", "eps", "dt", "T", "scheme", "sample_every"},
                           "params.");
        read_if(p, "s", cfg.s);
        read_if(p, "lambda", cfg.lambda);
        read_if(p, "eps", cfg.eps);
        read_if(p, "dt", cfg.dt);
        read_if(p, "T", cfg.T);
        read_if(p, "scheme", cfg.scheme);
        read_if(p, "sample_every", cfg.sample_every);
    }
    if (root.contains("initial_datum")) {
        const json& d = root.at("initial_datum");
        require_known_keys(d, {"family", "width", "center", "phase_k", "k0", "band", "seed"},
                           "initial_datum.");
        read_if(d, "family", cfg.initial_datum.family);
        read_if(d, "width", cfg.initial_datum.width);
        read_if(d, "center", cfg.initial_datum.center);
        read_if(d, "phase_k", cfg.initial_datum.phase_k);
        read_if(d, "k0", cfg.initial_datum.k0);
        read_if(d, "band", cfg.initial_datum.band);
        read_if(d, "seed", cfg.initial_datum.seed);
    }
    if (root.contains("sweeps")) {
        const json& s = root.at("sweeps");
        require_known_keys(s, {"eps", "s", "alpha", "R"}, "sweeps.");
        read_if(s, "eps", cfg.sweeps.eps);
        read_if(s, "s", cfg.sweeps.s);
        read_if(s, "alpha", cfg.sweeps.alpha);
        read_if(s, "R", cfg.sweeps.R);
    }
    if (root.contains("slack")) {
        const json& s = root.at("slack");
        require_known_keys(s, {"growth", "moment"}, "slack.");
        read_if(s, "growth", cfg.slack.growth);
        read_if(s, "moment", cfg.slack.moment);
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

ExperimentConfig default_config(const std::string& experiment_name) {
    ExperimentConfig cfg;
    cfg.name = experiment_name;
    cfg.initial_datum.family = "gaussian";
    cfg.initial_datum.width = std::numbers::sqrt2;

    if (experiment_name == "conservation") {
        cfg.dt = 0.02;
        cfg.sample_every = 1;
    } else if (experiment_name == "growth_bounds") {
        cfg.grid_n = 512;  // the focusing eps = 0 cases need the extra octave
        cfg.dt = 0.005;
        cfg.sample_every = 10;
    } else if (experiment_name == "eps_cauchy") {
        cfg.dt = 0.002;
        cfg.lambda = -1.0;
        cfg.sweeps.eps = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
        cfg.sweeps.R = {cfg.grid_L / 8.0, cfg.grid_L / 4.0};
    } else if (experiment_name == "weighted_moment") {
        cfg.dt = 0.005;
        cfg.sample_every = 5;
        cfg.sweeps.s = {0.7, 0.4};
        cfg.sweeps.alpha = {1.0, 0.5};
    } else if (experiment_name == "commutator_scan") {
        cfg.sweeps.s = {0.3, 0.5, 0.7, 0.9};
        cfg.sweeps.alpha = {0.25, 0.5, 0.75, 1.0};
    } else if (experiment_name == "gausson") {
        cfg.grid_n = 512;
        cfg.s = 1.0;
        cfg.lambda = -1.0;
        cfg.eps = 0.0;
        cfg.dt = 1e-3;
        cfg.sample_every = 100;
        cfg.initial_datum.family = "gausson";
    } else if (experiment_name == "operator_crossval") {
        cfg.grid_n = 256;
        cfg.grid_L = 16.0;
    } else if (experiment_name == "inequality_suite") {
        // scalar oracles only; grid fields unused
    }
    return cfg;
}

std::string config_echo(const ExperimentConfig& cfg) {
    json j;
    j["name"] = cfg.name;
    j["grid"] = {{"d", cfg.grid_d}, {"n", cfg.grid_n}, {"L", cfg.grid_L}};
    j["params"] = {{"s", cfg.s},   {"lambda", cfg.lambda}, {"eps", cfg.eps},
                   {"dt", cfg.dt}, {"T", cfg.T},           {"scheme", cfg.scheme},
                   {"sample_every", cfg.sample_every}};
    j["initial_datum"] = {{"family", cfg.initial_datum.family},
                          {"width", cfg.initial_datum.width},
                          {"center", cfg.initial_datum.center},
                          {"phase_k", cfg.initial_datum.phase_k},
                          {"k0", cfg.initial_datum.k0},
                          {"band", cfg.initial_datum.band},
                          {"seed", cfg.initial_datum.seed}};
    j["sweeps"] = {{"eps", cfg.sweeps.eps},
                   {"s", cfg.sweeps.s},
                   {"alpha", cfg.sweeps.alpha},
                   {"R", cfg.sweeps.R}};
    j["slack"] = {{"growth", cfg.slack.growth}, {"moment", cfg.slack.moment}};
    j["output_dir"] = cfg.output_dir;
    j["seed"] = cfg.seed;
    return j.dump();
}

}  // namespace lfse
