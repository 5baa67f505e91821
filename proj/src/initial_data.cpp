#include "beqt/initial_data.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "beqt/spectral_ops.hpp"

namespace beqt {

namespace {

// Deterministic mode order independent of N: k1 = -kmax..kmax, k2 likewise,
// draws taken for every mode in the "positive" half-plane. Grids too coarse
// to hold the band are rejected so the same seed means the same field.
void fill_band(ScalarField& f, std::uint64_t seed, int kmax) {
  const auto& g = *f.grid();
  if (kmax < 1) throw std::invalid_argument("random_band: kmax must be >= 1");
  if (kmax >= g.N() / 2) throw std::invalid_argument("random_band: kmax too large for grid");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  const int N = g.N();
  auto idx = [N](int k1, int k2) {
    const int a = k1 >= 0 ? k1 : k1 + N;
    const int b = k2 >= 0 ? k2 : k2 + N;
    return static_cast<std::size_t>(a) * N + b;
  };
  for (int k1 = -kmax; k1 <= kmax; ++k1) {
    for (int k2 = -kmax; k2 <= kmax; ++k2) {
      if (k1 < 0 || (k1 == 0 && k2 <= 0)) continue;  // half-plane, no mean
      const double re = dist(rng);
      const double im = dist(rng);
      const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
      const double amp = std::exp(-2.0 * ksq / (kmax * kmax));
      const std::complex<double> c(amp * re, amp * im);
      f.hat()[idx(k1, k2)] = c;
      f.hat()[idx(-k1, -k2)] = std::conj(c);
    }
  }
}

}  // namespace

ScalarField random_band_scalar(SpectralGrid::Ptr g, std::uint64_t seed, int kmax) {
  ScalarField f(std::move(g));
  fill_band(f, seed, kmax);
  return f;
}

VectorField random_band_divfree(SpectralGrid::Ptr g, std::uint64_t seed, int kmax,
                                double target_l2) {
  const ScalarField psi = random_band_scalar(g, seed, kmax);
  VectorField u(std::move(g));
  u.x = derivative(psi, 0, 1);
  u.y = derivative(psi, 1, 0) * (-1.0);
  const double n = l2_norm(u);
  if (n == 0.0) throw std::runtime_error("random_band_divfree: degenerate draw");
  u *= target_l2 / n;
  return u;
}

QTensorField random_band_qtensor(SpectralGrid::Ptr g, std::uint64_t seed, int kmax,
                                 double target_h1) {
  QTensorField q(g);
  q.q11 = random_band_scalar(g, seed * 2654435761u + 1, kmax);
  q.q12 = random_band_scalar(g, seed * 2654435761u + 2, kmax);
  const double n = h1_norm(q);
  if (n == 0.0) throw std::runtime_error("random_band_qtensor: degenerate draw");
  q *= target_h1 / n;
  return q;
}

QTensorField uniaxial_winding(SpectralGrid::Ptr g, double s, int w1, int w2) {
  const int N = g->N();
  std::vector<double> p11(g->size()), p12(g->size());
  const double h = 2.0 * M_PI / N;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double theta = 0.5 * (w1 * (i * h) + w2 * (j * h));
      // Q = s (n x n - Id/2) with n = (cos theta, sin theta):
      // q11 = s (cos^2 - 1/2) = (s/2) cos 2theta, q12 = (s/2) sin 2theta.
      const std::size_t m = static_cast<std::size_t>(i) * N + j;
      p11[m] = 0.5 * s * std::cos(2.0 * theta);
      p12[m] = 0.5 * s * std::sin(2.0 * theta);
    }
  }
  QTensorField q(g);
  q.q11 = ScalarField::from_physical(g, p11);
  q.q12 = ScalarField::from_physical(g, p12);
  return q;
}

VectorField taylor_green(SpectralGrid::Ptr g, double amplitude) {
  // sin x cos y = (e^{i(x+y)} - e^{-i(x+y)} + e^{i(x-y)} - e^{-i(x-y)}) / 4i
  const int N = g->N();
  auto idx = [N](int k1, int k2) {
    const int a = k1 >= 0 ? k1 : k1 + N;
    const int b = k2 >= 0 ? k2 : k2 + N;
    return static_cast<std::size_t>(a) * N + b;
  };
  VectorField u(g);
  const std::complex<double> c(0.0, -0.25 * amplitude);  // 1/(4i) = -i/4
  u.x.hat()[idx(1, 1)] = c;
  u.x.hat()[idx(-1, -1)] = std::conj(c);
  u.x.hat()[idx(1, -1)] = c;
  u.x.hat()[idx(-1, 1)] = std::conj(c);
  u.y.hat()[idx(1, 1)] = -c;
  u.y.hat()[idx(-1, -1)] = std::conj(-c);
  u.y.hat()[idx(1, -1)] = c;
  u.y.hat()[idx(-1, 1)] = std::conj(c);
  return u;
}

SimState make_random_band_state(SpectralGrid::Ptr g, const ModelParams& p,
                                const InitialDataSpec& spec) {
  SimState s;
  s.params = p;
  s.Q = random_band_qtensor(g, spec.seed, spec.kmax, spec.q_h1);
  s.u = random_band_divfree(g, spec.seed + 0x9e3779b97f4a7c15ull, spec.kmax, spec.u_l2);
  s.u = leray_project(s.u);
  return s;
}

}  // namespace beqt
