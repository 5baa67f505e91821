#include "beqt/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace beqt {

namespace {

constexpr char kMagic[4] = {'B', 'E', 'Q', 'T'};
constexpr std::uint32_t kVersion = 1;

// Host is little-endian on every supported target; plain byte copies.
void put_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

void put_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::uint32_t get_u32(std::istream& is) {
  std::uint32_t v;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(v)))
    throw CheckpointError("truncated file (u32)");
  return v;
}

double get_f64(std::istream& is) {
  double v;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(v)))
    throw CheckpointError("truncated file (f64)");
  return v;
}

void write_block(std::ostream& os, std::uint32_t ncomp, int N,
                 const ScalarField* const* comps) {
  put_u32(os, ncomp);
  put_u32(os, static_cast<std::uint32_t>(N));
  for (std::uint32_t c = 0; c < ncomp; ++c) {
    for (const auto& z : comps[c]->hat()) {
      put_f64(os, z.real());
      put_f64(os, z.imag());
    }
  }
}

void read_block(std::istream& is, std::uint32_t ncomp_expect, int N,
                ScalarField* const* comps) {
  const std::uint32_t ncomp = get_u32(is);
  if (ncomp != ncomp_expect) throw CheckpointError("unexpected component count");
  const std::uint32_t n = get_u32(is);
  if (static_cast<int>(n) != N) throw CheckpointError("field block grid mismatch");
  for (std::uint32_t c = 0; c < ncomp; ++c) {
    for (auto& z : comps[c]->hat()) {
      const double re = get_f64(is);
      const double im = get_f64(is);
      z = {re, im};
    }
  }
}

}  // namespace

void checkpoint_write(const SimState& state, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw CheckpointError("cannot open for writing: " + path);
  os.write(kMagic, 4);
  put_u32(os, kVersion);
  const int N = state.grid()->N();
  put_u32(os, static_cast<std::uint32_t>(N));
  put_u32(os, static_cast<std::uint32_t>(state.params.dim));
  put_f64(os, state.t);
  const auto& p = state.params;
  for (double v : {p.a, p.b, p.c, p.L, p.Gamma, p.nu, p.xi,
                   state.galerkin_n > 0 ? static_cast<double>(state.galerkin_n) : -1.0})
    put_f64(os, v);
  const ScalarField* qc[] = {&state.Q.q11, &state.Q.q12};
  write_block(os, 2, N, qc);
  const ScalarField* uc[] = {&state.u.x, &state.u.y};
  write_block(os, 2, N, uc);
  if (!os) throw CheckpointError("write failure: " + path);
}

SimState checkpoint_read(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw CheckpointError("cannot open for reading: " + path);
  char magic[4];
  if (!is.read(magic, 4)) throw CheckpointError("truncated file (magic)");
  if (std::memcmp(magic, kMagic, 4) != 0) throw CheckpointError("bad magic");
  const std::uint32_t version = get_u32(is);
  if (version != kVersion)
    throw CheckpointError("unsupported format version " + std::to_string(version));
  const std::uint32_t N = get_u32(is);
  const std::uint32_t dim = get_u32(is);
  if (dim != 2) throw CheckpointError("unsupported dim " + std::to_string(dim));

  SimState s;
  s.t = get_f64(is);
  s.params.a = get_f64(is);
  s.params.b = get_f64(is);
  s.params.c = get_f64(is);
  s.params.L = get_f64(is);
  s.params.Gamma = get_f64(is);
  s.params.nu = get_f64(is);
  s.params.xi = get_f64(is);
  const double gn = get_f64(is);
  s.galerkin_n = gn < 0.0 ? 0 : static_cast<int>(gn);
  s.params.dim = static_cast<int>(dim);
  try {
    s.params.validate();
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("invalid params: ") + e.what());
  }

  auto g = SpectralGrid::make(static_cast<int>(N));
  s.Q = QTensorField(g);
  s.u = VectorField(g);
  ScalarField* qc[] = {&s.Q.q11, &s.Q.q12};
  read_block(is, 2, static_cast<int>(N), qc);
  ScalarField* uc[] = {&s.u.x, &s.u.y};
  read_block(is, 2, static_cast<int>(N), uc);
  return s;
}

}  // namespace beqt
