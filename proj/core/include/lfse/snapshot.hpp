#pragma once

#include <string>

#include "lfse/grid.hpp"

namespace lfse {

/// Flat binary state snapshot.  Header, all little-endian 64-bit:
///   d (int), n (int), L, s, lambda, eps, t (floats),
/// followed by n^d (re, im) float pairs in row-major grid order.
struct SnapshotMeta {
    double s = 0.0;
    double lambda = 0.0;
    double eps = 0.0;
    double t = 0.0;
};

void write_snapshot(const std::string& path, const ComplexField& u, const SnapshotMeta& meta);

struct Snapshot {
    ComplexField field;
    SnapshotMeta meta;
};

Snapshot read_snapshot(const std::string& path);

}  // namespace lfse
