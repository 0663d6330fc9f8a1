#pragma once

#include "lfse/grid.hpp"

namespace lfse::detail {

/// Unitary DFT of size n^d (both directions scaled by n^(-d/2)).
/// in/out may alias.
void dft(const Grid& grid, const cplx* in, cplx* out, bool forward_direction);

}  // namespace lfse::detail
