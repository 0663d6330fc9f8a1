// Command-line front end: enumerate experiments, run one or all of them
// from an optional JSON config, or run the acceptance battery.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lfse/acceptance.hpp"
#include "lfse/experiments.hpp"

namespace {

int cmd_list() {
    for (const std::string& name : lfse::experiment_names()) std::printf("%s\n", name.c_str());
    return 0;
}

int cmd_run(const std::string& target, const std::optional<std::string>& config_path,
            const std::string& out_dir, std::optional<std::uint64_t> seed) {
    std::vector<std::string> names;
    if (target == "all")
        names = lfse::experiment_names();
    else
        names.push_back(target);

    bool all_pass = true;
    for (const std::string& name : names) {
        lfse::ExperimentConfig cfg = lfse::default_config(name);
        if (config_path) {
            cfg = lfse::load_config_file(*config_path);
            if (cfg.name.empty()) cfg.name = name;
            if (!out_dir.empty()) cfg.output_dir = out_dir + "/" + name;
        } else {
            cfg.output_dir = out_dir + "/" + name;
        }
        if (seed) cfg.seed = *seed;
        const lfse::ExperimentReport report = lfse::run_experiment(name, cfg);
        std::printf("%-18s %s\n", name.c_str(), report.passed() ? "pass" : "FAIL");
        for (const lfse::Assertion& a : report.assertions)
            if (a.verdict == lfse::Verdict::fail)
                std::printf("  failed: %s :: %s\n", a.name.c_str(), a.detail.c_str());
        all_pass = all_pass && report.passed();
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-spectral simulator and verification harness for the logarithmic "
                 "fractional Schroedinger equation"};
    app.require_subcommand(1);

    app.add_subcommand("list", "enumerate the named experiments");

    auto* run = app.add_subcommand("run", "run one experiment (or 'all')");
    std::string target;
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed_value = 0;
    run->add_option("name", target, "experiment name or 'all'")->required();
    run->add_option("--config", config_path, "JSON config file");
    auto* out_opt = run->add_option("--out", out_dir, "output directory");
    auto* seed_opt = run->add_option("--seed", seed_value, "override the RNG seed");

    auto* check = app.add_subcommand("check", "run the acceptance suite");
    std::string check_out = "acceptance_out";
    std::uint64_t check_seed = 20240601;
    check->add_option("--out", check_out, "output directory");
    check->add_option("--seed", check_seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("list")) return cmd_list();
        if (app.got_subcommand("run"))
            return cmd_run(target,
                           config_path.empty() ? std::nullopt
                                               : std::optional<std::string>(config_path),
                           out_opt->count() || config_path.empty() ? out_dir : std::string(),
                           seed_opt->count() ? std::optional<std::uint64_t>(seed_value)
                                             : std::nullopt);
        if (app.got_subcommand("check")) {
            const auto results = lfse::run_acceptance(check_out, check_seed);
            return lfse::print_acceptance(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
