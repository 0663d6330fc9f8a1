#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lfse/config.hpp"

namespace lfse {

enum class Verdict { pass, fail, diagnostic };

std::string to_string(Verdict v);

/// One checked statement inside a report.  `ref` is the stable tag of the
/// estimate the assertion exercises (exactly one per assertion).
struct Assertion {
    std::string name;
    std::string ref;
    Verdict verdict = Verdict::diagnostic;
    std::string detail;
};

struct ExperimentReport {
    std::string name;
    std::string config_echo;
    std::vector<std::pair<std::string, double>> measured;
    std::vector<Assertion> assertions;
    std::vector<std::string> artifacts;

    bool passed() const;
    void add_measure(const std::string& key, double value);
    void assert_that(const std::string& name, const std::string& ref, bool ok,
                     const std::string& detail);
    void diagnostic(const std::string& name, const std::string& ref, const std::string& detail);
};

/// Serializes a report as a stable structured-text document.
std::string report_text(const ExperimentReport& report);
void write_report(const ExperimentReport& report, const std::string& path);

/// Registered experiment names, in execution order for `run all`.
std::vector<std::string> experiment_names();

/// Runs one named experiment; writes its CSV artifacts, snapshots and
/// report under cfg.output_dir.  Throws on unknown names.
ExperimentReport run_experiment(const std::string& name, const ExperimentConfig& cfg);

ExperimentReport exp_conservation(const ExperimentConfig& cfg);
ExperimentReport exp_growth_bounds(const ExperimentConfig& cfg);
ExperimentReport exp_eps_cauchy(const ExperimentConfig& cfg);
ExperimentReport exp_weighted_moment(const ExperimentConfig& cfg);
ExperimentReport exp_commutator_scan(const ExperimentConfig& cfg);
ExperimentReport exp_gausson(const ExperimentConfig& cfg);
ExperimentReport exp_operator_crossval(const ExperimentConfig& cfg);
ExperimentReport exp_inequality_suite(const ExperimentConfig& cfg);

}  // namespace lfse
