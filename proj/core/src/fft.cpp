#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <tuple>

namespace lfse::detail {

namespace {

// One cached plan per (d, n, direction), executed on its own aligned
// buffer; inputs are copied through it.  FFTW_ESTIMATE keeps planning
// deterministic.
struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t size = 0;

    ~PlanEntry() {
        if (plan) fftw_destroy_plan(plan);
        if (buf) fftw_free(buf);
    }
};

std::mutex g_mutex;
std::map<std::tuple<int, int, int>, PlanEntry> g_plans;

PlanEntry& get_plan(int d, int n, int sign) {
    auto key = std::make_tuple(d, n, sign);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;

    PlanEntry& entry = g_plans[key];
    entry.size = d == 1 ? std::size_t(n) : std::size_t(n) * n;
    entry.buf = fftw_alloc_complex(entry.size);
    entry.plan = d == 1
                     ? fftw_plan_dft_1d(n, entry.buf, entry.buf, sign, FFTW_ESTIMATE)
                     : fftw_plan_dft_2d(n, n, entry.buf, entry.buf, sign, FFTW_ESTIMATE);
    return entry;
}

}  // namespace

void dft(const Grid& grid, const cplx* in, cplx* out, bool forward_direction) {
    const int sign = forward_direction ? FFTW_FORWARD : FFTW_BACKWARD;
    std::lock_guard<std::mutex> lock(g_mutex);
    PlanEntry& entry = get_plan(grid.d, grid.n, sign);

    std::memcpy(entry.buf, in, entry.size * sizeof(cplx));
    fftw_execute(entry.plan);

    const double scale = 1.0 / std::sqrt(double(entry.size));
    const cplx* res = reinterpret_cast<const cplx*>(entry.buf);
    for (std::size_t i = 0; i < entry.size; ++i) out[i] = res[i] * scale;
}

}  // namespace lfse::detail
