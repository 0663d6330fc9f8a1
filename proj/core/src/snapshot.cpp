#include "lfse/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace lfse {

namespace {

void put_u64le(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(char((v >> (8 * i)) & 0xff));
}

void put_f64le(std::string& buf, double x) {
    std::uint64_t v;
    std::memcpy(&v, &x, sizeof v);
    put_u64le(buf, v);
}

std::uint64_t get_u64le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(p[i]) << (8 * i);
    return v;
}

double get_f64le(const unsigned char* p) {
    const std::uint64_t v = get_u64le(p);
    double x;
    std::memcpy(&x, &v, sizeof x);
    return x;
}

}  // namespace

void write_snapshot(const std::string& path, const ComplexField& u, const SnapshotMeta& meta) {
    std::string buf;
    buf.reserve(7 * 8 + u.values.size() * 16);
    put_u64le(buf, std::uint64_t(u.grid.d));
    put_u64le(buf, std::uint64_t(u.grid.n));
    put_f64le(buf, u.grid.L);
    put_f64le(buf, meta.s);
    put_f64le(buf, meta.lambda);
    put_f64le(buf, meta.eps);
    put_f64le(buf, meta.t);
    for (const cplx& v : u.values) {
        put_f64le(buf, v.real());
        put_f64le(buf, v.imag());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_snapshot: cannot open " + path);
    out.write(buf.data(), std::streamsize(buf.size()));
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_snapshot: cannot open " + path);
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() < 7 * 8) throw std::runtime_error("read_snapshot: truncated header");
    const unsigned char* p = reinterpret_cast<const unsigned char*>(buf.data());

    const int d = int(get_u64le(p));
    const int n = int(get_u64le(p + 8));
    const double L = get_f64le(p + 16);
    Snapshot snap;
    snap.meta.s = get_f64le(p + 24);
    snap.meta.lambda = get_f64le(p + 32);
    snap.meta.eps = get_f64le(p + 40);
    snap.meta.t = get_f64le(p + 48);

    snap.field.grid = make_grid(d, n, L);
    const std::size_t count = snap.field.grid.size();
    if (buf.size() != 7 * 8 + count * 16)
        throw std::runtime_error("read_snapshot: payload size mismatch");
    snap.field.values.resize(count);
    const unsigned char* q = p + 7 * 8;
    for (std::size_t i = 0; i < count; ++i) {
        const double re = get_f64le(q + 16 * i);
        const double im = get_f64le(q + 16 * i + 8);
        snap.field.values[i] = {re, im};
    }
    return snap;
}

}  // namespace lfse
