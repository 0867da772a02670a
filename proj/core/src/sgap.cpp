#include "gapflow/sgap.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace gapflow {

namespace {

constexpr char kMagic[4] = {'S', 'G', 'A', 'P'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ofstream& o, std::uint32_t v) {
    o.write(reinterpret_cast<const char*>(&v), 4);
}
void put_f64(std::ofstream& o, double v) {
    o.write(reinterpret_cast<const char*>(&v), 8);
}
std::uint32_t get_u32(std::ifstream& in) {
    std::uint32_t v;
    in.read(reinterpret_cast<char*>(&v), 4);
    return v;
}
double get_f64(std::ifstream& in) {
    double v;
    in.read(reinterpret_cast<char*>(&v), 8);
    return v;
}

double uniform_spacing(const Axis& a) {
    const double h0 = a.h(0);
    for (int i = 1; i < a.cells(); ++i)
        if (std::abs(a.h(i) - h0) > 1e-12 * std::abs(h0)) return -1.0;
    return h0;
}

} // namespace

void write_sgap(const std::string& path, const DiscreteStokesSolution& sol) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.write(kMagic, 4);
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(sol.grid.nx()));
    put_u32(out, static_cast<std::uint32_t>(sol.grid.ny()));
    put_f64(out, uniform_spacing(sol.grid.x));
    put_f64(out, uniform_spacing(sol.grid.y));
    put_f64(out, sol.mu);
    for (double e : sol.grid.x.edges) put_f64(out, e);
    for (double e : sol.grid.y.edges) put_f64(out, e);
    for (double q : sol.u) put_f64(out, q);
    for (double q : sol.v) put_f64(out, q);
    for (double q : sol.p) put_f64(out, q);
    out.write(reinterpret_cast<const char*>(sol.cell_solid.data()),
              static_cast<std::streamsize>(sol.cell_solid.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

DiscreteStokesSolution read_sgap(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("not an SGAP file: " + path);
    const std::uint32_t ver = get_u32(in);
    if (ver != kVersion) throw std::runtime_error("unsupported SGAP version");
    const int nx = static_cast<int>(get_u32(in));
    const int ny = static_cast<int>(get_u32(in));
    get_f64(in); // hx hint
    get_f64(in); // hy hint
    DiscreteStokesSolution sol;
    sol.mu = get_f64(in);
    sol.grid.x.edges.resize(nx + 1);
    sol.grid.y.edges.resize(ny + 1);
    for (double& e : sol.grid.x.edges) e = get_f64(in);
    for (double& e : sol.grid.y.edges) e = get_f64(in);
    sol.u.resize(static_cast<std::size_t>(nx + 1) * ny);
    sol.v.resize(static_cast<std::size_t>(nx) * (ny + 1));
    sol.p.resize(static_cast<std::size_t>(nx) * ny);
    for (double& q : sol.u) q = get_f64(in);
    for (double& q : sol.v) q = get_f64(in);
    for (double& q : sol.p) q = get_f64(in);
    sol.cell_solid.resize(static_cast<std::size_t>(nx) * ny);
    in.read(reinterpret_cast<char*>(sol.cell_solid.data()),
            static_cast<std::streamsize>(sol.cell_solid.size()));
    if (!in) throw std::runtime_error("truncated SGAP file: " + path);
    return sol;
}

} // namespace gapflow
