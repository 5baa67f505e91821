#include "beqt/littlewood_paley.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "beqt/parallel.hpp"

namespace beqt {

namespace {

SpectralGrid::Ptr padded_grid(int N) {
  static std::map<int, SpectralGrid::Ptr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto g = SpectralGrid::make(N);
  cache.emplace(N, g);
  return g;
}

// Map a coefficient index on grid N to the index on grid M >= N (same mode).
std::size_t embed_index(int k1, int k2, int M) {
  const int a = k1 >= 0 ? k1 : k1 + M;
  const int b = k2 >= 0 ? k2 : k2 + M;
  return static_cast<std::size_t>(a) * M + b;
}

}  // namespace

ScalarField exact_product(const ScalarField& a, const ScalarField& b) {
  if (a.grid() != b.grid()) throw std::invalid_argument("exact_product: grid mismatch");
  const auto& g = *a.grid();
  const int N = g.N();
  const auto gp = padded_grid(2 * N);

  ScalarField ap(gp), bp(gp);
  for (std::size_t m = 0; m < g.size(); ++m) {
    const std::size_t mp = embed_index(g.k1(m), g.k2(m), 2 * N);
    ap.hat()[mp] = a.hat()[m];
    bp.hat()[mp] = b.hat()[m];
  }
  const ScalarField prod = multiply_raw(ap, bp);

  ScalarField out(a.grid());
  for (std::size_t m = 0; m < g.size(); ++m) {
    // Skip the ambiguous Nyquist rows of the small grid.
    if (g.k1(m) == -N / 2 || g.k2(m) == -N / 2) continue;
    out.hat()[m] = prod.hat()[embed_index(g.k1(m), g.k2(m), 2 * N)];
  }
  return out;
}

DyadicFrame::DyadicFrame(SpectralGrid::Ptr g) : g_(std::move(g)) {
  const double mask_r = g_->mask_radius();
  q_max_ = -1;
  while (std::ldexp(1.0, q_max_ + 2) <= mask_r) ++q_max_;  // 2^{q+1} <= mask radius
  const double kmax = mask_r * std::sqrt(2.0);             // box-mask corner
  q_top_ = 0;
  while (std::ldexp(1.0, q_top_) < kmax) ++q_top_;         // 2^{q_top} >= kmax
}

double DyadicFrame::chi(double r) {
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  // Smoothstep built from exp(-1/t); C^inf, equals 1 at 1/2 and 0 at 1.
  const double t = (r - 0.5) * 2.0;
  const double g0 = std::exp(-1.0 / (1.0 - t));
  const double g1 = std::exp(-1.0 / t);
  return g0 / (g0 + g1);
}

ScalarField DyadicFrame::shell_project(const ScalarField& f, int q) const {
  if (q < 0 || q > q_top_)
    throw std::invalid_argument("shell_project: q out of range");
  const auto& g = *g_;
  const double scale = std::ldexp(1.0, -q);
  ScalarField out(g_);
  par::for_n(g.size(), [&](std::size_t m) {
    const double r = std::sqrt(g.ksq(m)) * scale;
    out.hat()[m] = phi_profile(r) * f.hat()[m];
  });
  return out;
}

ScalarField DyadicFrame::low_pass(const ScalarField& f, int q) const {
  const auto& g = *g_;
  const double scale = std::ldexp(1.0, -q);
  ScalarField out(g_);
  par::for_n(g.size(), [&](std::size_t m) {
    const double r = std::sqrt(g.ksq(m)) * scale;
    out.hat()[m] = chi(r) * f.hat()[m];
  });
  return out;
}

ShellSpectrum DyadicFrame::shell_spectrum(const ScalarField& f) const {
  ShellSpectrum s;
  s.s0_norm = l2_norm(low_pass(f, 0));
  s.shell_norms.resize(q_top_ + 1);
  for (int q = 0; q <= q_top_; ++q) s.shell_norms[q] = l2_norm(shell_project(f, q));
  return s;
}

double DyadicFrame::sobolev_norm(const ScalarField& f, double s) const {
  const ShellSpectrum sp = shell_spectrum(f);
  double acc = sp.s0_norm * sp.s0_norm;
  for (int q = 0; q <= q_top_; ++q)
    acc += std::pow(2.0, 2.0 * q * s) * sp.shell_norms[q] * sp.shell_norms[q];
  return std::sqrt(acc);
}

DyadicFrame::Bony DyadicFrame::bony_decompose(const ScalarField& a,
                                              const ScalarField& b) const {
  if (a.grid() != b.grid() || a.grid() != g_)
    throw std::invalid_argument("bony_decompose: grid mismatch");
  // Pieces: Delta_{-1} = S_0, shells 0..q_top; pairs split by |q - q'|.
  std::vector<ScalarField> da, db;
  da.push_back(low_pass(a, 0));
  db.push_back(low_pass(b, 0));
  for (int q = 0; q <= q_top_; ++q) {
    da.push_back(shell_project(a, q));
    db.push_back(shell_project(b, q));
  }
  Bony out;
  out.low_high = ScalarField(g_);
  out.high_low = ScalarField(g_);
  out.resonant = ScalarField(g_);
  const int n = static_cast<int>(da.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (max_abs_coeff(da[i]) == 0.0 || max_abs_coeff(db[j]) == 0.0) continue;
      const ScalarField prod = exact_product(da[i], db[j]);
      if (j >= i + 2)
        out.low_high += prod;
      else if (i >= j + 2)
        out.high_low += prod;
      else
        out.resonant += prod;
    }
  }
  return out;
}

DyadicFrame::CommutatorReport DyadicFrame::commutator(int q, const ScalarField& u,
                                                      const ScalarField& v, double p,
                                                      double r, double s) const {
  const double inv_p = 1.0 / p;
  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  const double inv_s = std::isinf(s) ? 0.0 : 1.0 / s;
  if (std::abs(inv_p - inv_r - inv_s) > 1e-12)
    throw std::invalid_argument("commutator: need 1/p = 1/r + 1/s");
  CommutatorReport rep;
  rep.field = shell_project(exact_product(u, v), q) - exact_product(u, shell_project(v, q));
  rep.norm_lp = lp_norm(rep.field, p);
  const ScalarField ux = derivative(u, 1, 0);
  const ScalarField uy = derivative(u, 0, 1);
  double grad_lr;
  if (std::isinf(r)) {
    const auto px = ux.to_physical();
    const auto py = uy.to_physical();
    grad_lr = 0.0;
    for (std::size_t m = 0; m < px.size(); ++m)
      grad_lr = std::max(grad_lr, std::sqrt(px[m] * px[m] + py[m] * py[m]));
  } else {
    const auto px = ux.to_physical();
    const auto py = uy.to_physical();
    const double cell = g_->cell_area();
    const double acc = par::sum_n(px.size(), [&](std::size_t m) {
      return std::pow(px[m] * px[m] + py[m] * py[m], r / 2.0);
    });
    grad_lr = std::pow(cell * acc, 1.0 / r);
  }
  rep.bound_no_c = std::ldexp(1.0, -q) * grad_lr * lp_norm(v, s);
  rep.ratio = rep.bound_no_c > 0.0 ? rep.norm_lp / rep.bound_no_c : 0.0;
  return rep;
}

DyadicFrame::InterpolationReport DyadicFrame::interpolation_check(const ScalarField& g,
                                                                  int p) const {
  if (p < 1) throw std::invalid_argument("interpolation_check: p must be >= 1");
  const double grad = grad_l2_norm(g);
  const double l2 = l2_norm(g);
  if (grad == 0.0 && l2 > 0.0)
    throw std::invalid_argument("interpolation_check: degenerate (constant nonzero g)");
  InterpolationReport rep;
  rep.lhs = lp_norm(g, 2.0 * p);
  rep.rhs_no_c = std::sqrt(static_cast<double>(p)) * std::pow(l2, 1.0 / p) *
                 std::pow(grad, 1.0 - 1.0 / p);
  rep.ratio = rep.rhs_no_c > 0.0 ? rep.lhs / rep.rhs_no_c : 0.0;
  return rep;
}

DyadicFrame::BernsteinReport DyadicFrame::bernstein_check(const ScalarField& f,
                                                          int q) const {
  BernsteinReport rep;
  const ScalarField df = shell_project(f, q);
  const double l2 = l2_norm(df);
  if (l2 < 1e-300) {
    rep.vacuous = true;
    return rep;
  }
  const double two_q = std::ldexp(1.0, q);
  rep.grad_ratio = grad_l2_norm(df) / (two_q * l2);
  const double d = 2.0;
  rep.lp_ratio_2_4 = lp_norm(df, 4.0) / (std::pow(2.0, d * (0.5 - 0.25) * q) * l2);
  rep.lp_ratio_2_inf = linf_norm(df) / (std::pow(2.0, d * 0.5 * q) * l2);
  const double fl2 = l2_norm(f);
  if (fl2 > 0.0) {
    const ScalarField sf = low_pass(f, q);
    const double gx = grad_l2_norm(sf);
    rep.lowpass_ratio = gx / (two_q * fl2);
  }
  return rep;
}

double DyadicFrame::sobolev_norm(const VectorField& u, double s) const {
  const double a = sobolev_norm(u.x, s);
  const double b = sobolev_norm(u.y, s);
  return std::sqrt(a * a + b * b);
}

double DyadicFrame::grad_sobolev_norm(const QTensorField& q, double s) const {
  double acc = 0.0;
  for (const ScalarField* comp : {&q.q11, &q.q12}) {
    const double gx = sobolev_norm(derivative(*comp, 1, 0), s);
    const double gy = sobolev_norm(derivative(*comp, 0, 1), s);
    acc += 2.0 * (gx * gx + gy * gy);
  }
  return std::sqrt(acc);
}

DyadicFrame::LogEmbeddingReport DyadicFrame::log_embedding_monitor(const QTensorField& q,
                                                                   double s) const {
  const double h1 = h1_norm(q);
  if (h1 == 0.0)
    throw std::invalid_argument("log_embedding_monitor: zero field");
  LogEmbeddingReport rep;
  rep.lhs = linf_norm(q);
  const double grad_hs = grad_sobolev_norm(q, s);
  rep.rhs = h1 * std::sqrt(std::log(std::exp(1.0) + grad_hs * grad_hs / h1));
  rep.ratio = rep.lhs / rep.rhs;
  return rep;
}

DyadicFrame::PhiSplit DyadicFrame::phi_split(const SimState& state, double s) const {
  if (!(s > 0.0)) throw std::invalid_argument("phi_split: s must be > 0");
  PhiSplit out;
  const double gq = grad_sobolev_norm(state.Q, s);
  const double us = sobolev_norm(state.u, s);
  out.phi = state.params.L * gq * gq + us * us;

  double low_q = 0.0;
  for (const ScalarField* comp : {&state.Q.q11, &state.Q.q12}) {
    const double gx = l2_norm(low_pass(derivative(*comp, 1, 0), 0));
    const double gy = l2_norm(low_pass(derivative(*comp, 0, 1), 0));
    low_q += 2.0 * (gx * gx + gy * gy);
  }
  const double sux = l2_norm(low_pass(state.u.x, 0));
  const double suy = l2_norm(low_pass(state.u.y, 0));
  out.phi1 = state.params.L * low_q + sux * sux + suy * suy;
  out.phi2 = out.phi - out.phi1;
  return out;
}

}  // namespace beqt
