#include "lfse/acceptance.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "lfse/experiments.hpp"

namespace lfse {

namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// True if at least one assertion carries the ref and all of them pass.
bool ref_passes(const ExperimentReport& report, const std::string& ref, std::string& detail) {
    bool seen = false, ok = true;
    for (const Assertion& a : report.assertions) {
        if (a.ref != ref || a.verdict == Verdict::diagnostic) continue;
        seen = true;
        if (a.verdict != Verdict::pass) {
            ok = false;
            detail = a.name + ": " + a.detail;
        }
    }
    if (!seen) detail = "no assertion with ref " + ref;
    if (seen && ok) detail = "all '" + ref + "' assertions pass";
    return seen && ok;
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& out_dir, std::uint64_t seed) {
    std::vector<CriterionResult> results;
    fs::create_directories(out_dir);

    auto subdir = [&](const std::string& name) {
        const std::string d = (fs::path(out_dir) / name).string();
        fs::create_directories(d);
        return d;
    };

    // 1. multiplier exactness on plane waves
    {
        const Grid g = make_grid(1, 256, 32.0);
        double worst = 0.0;
        for (double sv : {0.3, 0.5, 0.7, 1.0}) {
            const FractionalOrder s(sv);
            for (int m0 : {1, 5, 16}) {
                const double k0 = 2.0 * pi * m0 / g.L;
                const ComplexField u = sample(g, [&](std::span<const double> x) -> cplx {
                    return std::exp(cplx{0.0, k0 * x[0]});
                });
                const ComplexField out = frac_laplacian(u, s);
                const double expected = std::pow(k0, 2.0 * sv);
                const cplx eig = inner_product(out, u) / inner_product(u, u);
                worst = std::max(worst, std::abs(eig - expected) / expected);
            }
        }
        results.push_back({1, "multiplier-exactness", worst < 1e-12,
                           "max plane-wave eigenvalue rel err " + fmt(worst) + " (tol 1e-12)"});
    }

    // 2. mass conservation over 1000 strang steps, both signs of lambda
    {
        bool ok = true;
        std::string detail;
        double worst = 0.0;
        for (double lam : {1.0, -1.0}) {
            ExperimentConfig cfg = default_config("conservation");
            cfg.lambda = lam;
            cfg.dt = 1e-3;  // 1000 steps over T = 1
            cfg.seed = seed;
            cfg.output_dir = subdir(lam > 0 ? "conservation_lp" : "conservation_lm");
            const ExperimentReport rep = run_experiment("conservation", cfg);
            std::string d;
            if (!ref_passes(rep, "mass-conservation", d)) {
                ok = false;
                detail = d;
            }
            for (const auto& [k, v] : rep.measured)
                if (k == "mass_drift_rel") worst = std::max(worst, v);
        }
        if (ok) detail = "max relative drift " + fmt(worst) + " over 1000 steps (tol 1e-11)";
        results.push_back({2, "mass-conservation", ok, detail});
    }

    // 3. E_eps conservation order under step halving, strang and lie
    {
        bool ok = true;
        std::string detail, acc;
        for (const std::string scheme : {"strang", "lie"}) {
            ExperimentConfig cfg = default_config("conservation");
            cfg.scheme = scheme;
            cfg.seed = seed;
            cfg.output_dir = subdir("energy_order_" + scheme);
            const ExperimentReport rep = run_experiment("conservation", cfg);
            std::string d;
            if (!ref_passes(rep, "energy-conservation-splitting-order", d)) {
                ok = false;
                detail = d;
            }
            for (const auto& [k, v] : rep.measured)
                if (k == "energy_drift_ratio") acc += scheme + " ratio " + fmt(v) + "  ";
        }
        if (ok) detail = acc + "(strang in [3,5], lie in [1.7,2.5])";
        results.push_back({3, "energy-conservation-order", ok, detail});
    }

    // 4. Gronwall growth bounds over the 12-case sweep
    {
        ExperimentConfig cfg = default_config("growth_bounds");
        cfg.seed = seed;
        cfg.output_dir = subdir("growth_bounds");
        const ExperimentReport rep = run_experiment("growth_bounds", cfg);
        std::string d1, d2, d3;
        const bool ok = ref_passes(rep, "gronwall-hs-full-norm", d1) &
                        ref_passes(rep, "gronwall-h1", d2) & ref_passes(rep, "gronwall-dtu", d3);
        results.push_back({4, "gronwall-growth-bounds", ok,
                           ok ? "hs, h1, du/dt ratios within e^{4|lambda|t} x 1.05 on 12 cases"
                              : d1 + " | " + d2 + " | " + d3});
    }

    // 5 and 6 come from the inequality suite
    {
        ExperimentConfig cfg = default_config("inequality_suite");
        cfg.seed = seed;
        cfg.output_dir = subdir("inequality_suite");
        const ExperimentReport rep = run_experiment("inequality_suite", cfg);
        std::string d5, d6;
        const bool ok5 = ref_passes(rep, "log-lipschitz-pointwise", d5);
        const bool ok6 = ref_passes(rep, "mu-eps-closed-form", d6);
        double viol = -1.0, mu_err = -1.0;
        for (const auto& [k, v] : rep.measured) {
            if (k == "log_lipschitz_violations") viol = v;
            if (k == "mu_eps_max_rel_error") mu_err = v;
        }
        results.push_back({5, "log-lipschitz-oracle", ok5,
                           ok5 ? fmt(viol) + " violations in 1e6 samples" : d5});
        results.push_back({6, "mu-eps-closed-form", ok6,
                           ok6 ? "max rel err " + fmt(mu_err) + " on 1e3 samples (tol 1e-10)"
                               : d6});
    }

    // 7. localized L^2 Cauchy differences decrease along the eps sweep
    {
        ExperimentConfig cfg = default_config("eps_cauchy");
        cfg.seed = seed;
        cfg.output_dir = subdir("eps_cauchy");
        const ExperimentReport rep = run_experiment("eps_cauchy", cfg);
        std::string d;
        const bool ok = ref_passes(rep, "eps-cauchy-limit", d);
        results.push_back({7, "eps-cauchy-monotonicity", ok, d});
    }

    // 8. commutator estimate stable under refinement on admissible pairs
    {
        ExperimentConfig cfg = default_config("commutator_scan");
        cfg.seed = seed;
        cfg.output_dir = subdir("commutator_scan");
        const ExperimentReport rep = run_experiment("commutator_scan", cfg);
        std::string d;
        const bool ok = ref_passes(rep, "commutator-hs-l2-bound", d);
        results.push_back({8, "commutator-refinement-stability", ok, d});
    }

    // 9. weighted-moment Gronwall bound with the empirical constant
    {
        ExperimentConfig cfg = default_config("weighted_moment");
        cfg.seed = seed;
        cfg.output_dir = subdir("weighted_moment");
        const ExperimentReport rep = run_experiment("weighted_moment", cfg);
        std::string d;
        const bool ok = ref_passes(rep, "weighted-moment-gronwall", d);
        results.push_back({9, "weighted-moment-bound", ok, d});
    }

    // 10. Gagliardo and second-difference realizations against spectral
    {
        ExperimentConfig cfg = default_config("operator_crossval");
        cfg.seed = seed;
        cfg.output_dir = subdir("operator_crossval");
        const ExperimentReport rep = run_experiment("operator_crossval", cfg);
        std::string d1, d2;
        const bool ok = ref_passes(rep, "seminorm-equivalence-constant", d1) &
                        ref_passes(rep, "integral-spectral-consistency", d2);
        results.push_back({10, "operator-crossval", ok,
                           ok ? "seminorm-ratio spread < 2%; integral form < 5% and improving"
                              : d1 + " | " + d2});
    }

    // 11. classical-limit stationary profile
    {
        ExperimentConfig cfg = default_config("gausson");
        cfg.seed = seed;
        cfg.output_dir = subdir("gausson");
        const ExperimentReport rep = run_experiment("gausson", cfg);
        std::string d1, d2;
        const bool ok = ref_passes(rep, "stationary-profile-residual", d1) &
                        ref_passes(rep, "gausson-evolution-error", d2);
        double err = -1.0;
        for (const auto& [k, v] : rep.measured)
            if (k == "profile_l2_error") err = v;
        results.push_back({11, "gausson-classical-limit", ok,
                           ok ? "L2 profile error " + fmt(err) + " at T = 1 (tol 5e-3)"
                              : d1 + " | " + d2});
    }

    // 12. determinism: identical seeds give byte-identical CSV outputs
    {
        bool ok = true;
        int compared = 0;
        std::string detail;
        for (const std::string& name : experiment_names()) {
            std::vector<std::string> dirs;
            for (int run = 0; run < 2; ++run) {
                ExperimentConfig cfg = default_config(name);
                cfg.seed = seed;
                cfg.output_dir = subdir("determinism_" + name + "_run" + std::to_string(run));
                run_experiment(name, cfg);
                dirs.push_back(cfg.output_dir);
            }
            for (const auto& entry : fs::directory_iterator(dirs[0])) {
                if (entry.path().extension() != ".csv") continue;
                const std::string a = read_file_bytes(entry.path().string());
                const std::string b =
                    read_file_bytes((fs::path(dirs[1]) / entry.path().filename()).string());
                ++compared;
                if (a.empty() || a != b) {
                    ok = false;
                    detail = "mismatch in " + entry.path().filename().string();
                }
            }
        }
        if (ok)
            detail = std::to_string(compared) +
                     " CSV files byte-identical across repeated seeded runs";
        results.push_back({12, "determinism", ok && compared > 0, detail});
    }

    return results;
}

bool print_acceptance(const std::vector<CriterionResult>& results) {
    bool all_pass = true;
    for (const CriterionResult& r : results) {
        std::printf("[%2d] %s %s: %s\n", r.index, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("acceptance: %s\n", all_pass ? "all criteria pass" : "FAILURES present");
    return all_pass;
}

}  // namespace lfse
