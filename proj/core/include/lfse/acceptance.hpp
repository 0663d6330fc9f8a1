#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lfse {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full acceptance battery (fixed tolerances, deterministic
/// seeds) and writes artifacts under out_dir.  One result per criterion.
std::vector<CriterionResult> run_acceptance(const std::string& out_dir, std::uint64_t seed);

/// Formats "[ok] name: detail" lines; returns false if any criterion failed.
bool print_acceptance(const std::vector<CriterionResult>& results);

}  // namespace lfse
