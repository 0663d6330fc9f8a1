// Acceptance battery: one pass/fail line per criterion, nonzero exit on
// any failure.  Same code path as `lfse check`.

#include <cstdlib>

#include "lfse/acceptance.hpp"

int main() {
    const auto results = lfse::run_acceptance("acceptance_out", 20240601);
    return lfse::print_acceptance(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
