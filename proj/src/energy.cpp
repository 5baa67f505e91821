#include "beqt/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "beqt/model_terms.hpp"
#include "beqt/parallel.hpp"

namespace beqt {

std::pair<double, double> free_energy(const QTensorField& q, const ModelParams& p) {
  const double grad = grad_l2_norm(q);
  const double elastic = 0.5 * p.L * grad * grad;

  // Bulk density by physical quadrature; tr Q^3 = 0 in d = 2.
  const auto p11 = q.q11.to_physical();
  const auto p12 = q.q12.to_physical();
  const double cell = q.grid()->cell_area();
  const double bulk = cell * par::sum_n(p11.size(), [&](std::size_t m) {
    const double tr2 = 2.0 * (p11[m] * p11[m] + p12[m] * p12[m]);
    return 0.5 * p.a * tr2 + 0.25 * p.c * tr2 * tr2;
  });
  return {elastic, bulk};
}

EnergyReport total_energy(const SimState& s) {
  EnergyReport r;
  r.t = s.t;
  const double ul2 = l2_norm(s.u);
  r.kinetic = 0.5 * ul2 * ul2;
  std::tie(r.elastic, r.bulk) = free_energy(s.Q, s.params);
  r.total = r.kinetic + r.elastic + r.bulk;

  const double gu = grad_l2_norm(s.u);
  r.diss_viscous = s.params.nu * gu * gu;
  const QTensorField h = compute_H(s.Q, s.params);
  const double hl2 = l2_norm(h);
  r.diss_rotational = s.params.Gamma * hl2 * hl2;
  return r;
}

LyapunovResidualReport lyapunov_residual(const std::vector<EnergyReport>& traj) {
  if (traj.size() < 3)
    throw std::invalid_argument("lyapunov_residual: need at least 3 samples");
  LyapunovResidualReport out;
  out.residuals.reserve(traj.size() - 1);
  for (std::size_t k = 0; k + 1 < traj.size(); ++k) {
    const double dt = traj[k + 1].t - traj[k].t;
    const double dE = (traj[k + 1].total - traj[k].total) / dt;
    const double diss = 0.5 * (traj[k].diss_viscous + traj[k].diss_rotational +
                               traj[k + 1].diss_viscous + traj[k + 1].diss_rotational);
    const double r = dE + diss;
    out.residuals.push_back(r);
    out.max_abs = std::max(out.max_abs, std::abs(r));
  }
  return out;
}

double lemma1_residual(const QTensorField& qprime, const QTensorField& q,
                       const VectorField& u) {
  if (qprime.grid() != q.grid() || q.grid() != u.grid())
    throw std::invalid_argument("lemma1_residual: grid mismatch");
  const auto g = q.grid();
  const double cell = g->cell_area();

  // Physical samples; raw products (the identity is a quadrature statement,
  // both sides use the same sampled grid functions).
  const auto om = (0.5 * (derivative(u.x, 0, 1) - derivative(u.y, 1, 0))).to_physical();
  const auto qp11 = qprime.q11.to_physical();
  const auto qp12 = qprime.q12.to_physical();
  const QTensorField lap{laplacian(q.q11), laplacian(q.q12)};
  const auto lq11 = lap.q11.to_physical();
  const auto lq12 = lap.q12.to_physical();

  // First integral: tr((Omega Q' - Q' Omega) Delta Q) with Omega_{12} = om.
  // For 2x2: Omega Q' - Q' Omega = 2 om [[q12', -q11'], [-q11', -q12']].
  const double lhs = cell * par::sum_n(om.size(), [&](std::size_t m) {
    const double c11 = 2.0 * om[m] * qp12[m];
    const double c12 = -2.0 * om[m] * qp11[m];
    // tr(C DQ) with both traceless symmetric: 2 (c11 l11 + c12 l12)
    return 2.0 * (c11 * lq11[m] + c12 * lq12[m]);
  });

  // Second integral: d_b (Q' DQ - DQ Q')_{ab} u_a, derivative spectral.
  // M = Q' DQ - DQ Q' is antisymmetric: M12 = 2 (q11' l12 - q12' l11).
  std::vector<double> m12(om.size());
  par::for_n(om.size(), [&](std::size_t m) {
    m12[m] = 2.0 * (qp11[m] * lq12[m] - qp12[m] * lq11[m]);
  });
  const ScalarField m12f = ScalarField::from_physical(g, m12);
  // div M row-wise: (div M)_1 = d_2 M12, (div M)_2 = d_1 M21 = -d_1 M12.
  const double rhs = inner(derivative(m12f, 0, 1), u.x) - inner(derivative(m12f, 1, 0), u.y);

  return lhs - rhs;
}

bool coercivity_check_pointwise(const QTensor& q, double A, double delta,
                                const ModelParams& p) {
  if (!(A > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("coercivity_check: A and delta must be > 0");
  const double tr2 = trace_q2(q);
  double cubic_bound = 0.0;
  if (q.dim() == 3) {
    cubic_bound = std::abs(p.b) / 3.0 * (3.0 * delta / 8.0 * tr2 * tr2 + tr2 / delta);
  }
  const double g = (0.5 * A * A + 0.5 * p.a) * tr2 - cubic_bound + 0.25 * p.c * tr2 * tr2;
  return g >= -1e-12 * (1.0 + tr2 + tr2 * tr2);
}

bool coercivity_check(const QTensorField& q, double A, double delta,
                      const ModelParams& p) {
  if (!(A > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("coercivity_check: A and delta must be > 0");
  const auto p11 = q.q11.to_physical();
  const auto p12 = q.q12.to_physical();
  const double cell = q.grid()->cell_area();
  double scale = 0.0;
  const double integral = cell * par::sum_n(p11.size(), [&](std::size_t m) {
    const double tr2 = 2.0 * (p11[m] * p11[m] + p12[m] * p12[m]);
    return (0.5 * A * A + 0.5 * p.a) * tr2 + 0.25 * p.c * tr2 * tr2;
  });
  for (std::size_t m = 0; m < p11.size(); ++m)
    scale = std::max(scale, p11[m] * p11[m] + p12[m] * p12[m]);
  return integral >= -1e-12 * (1.0 + scale) * q.grid()->domain_area();
}

TrajectorySample sample_trajectory(const SimState& s) {
  TrajectorySample ts;
  ts.t = s.t;
  ts.h1_Q = h1_norm(s.Q);
  ts.l2_u = l2_norm(s.u);
  const double gu = grad_l2_norm(s.u);
  ts.grad_u_sq = gu * gu;
  const double gq = grad_l2_norm(s.Q);
  ts.grad_Q_sq = gq * gq;
  const QTensorField lap{laplacian(s.Q.q11), laplacian(s.Q.q12)};
  const double lq = l2_norm(lap);
  ts.lap_Q_sq = lq * lq;
  return ts;
}

AprioriReport apriori_monitor(const std::vector<TrajectorySample>& traj,
                              const ModelParams& p) {
  if (traj.empty()) throw std::invalid_argument("apriori_monitor: empty trajectory");
  AprioriReport r;
  r.t.reserve(traj.size());
  r.h1_series.reserve(traj.size());
  r.aggregate13.reserve(traj.size());

  double cum_grad_u = 0.0, cum_lap_q = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto& s = traj[k];
    if (!std::isfinite(s.h1_Q) || !std::isfinite(s.l2_u)) r.finite = false;
    if (k > 0) {
      const double dt = s.t - traj[k - 1].t;
      cum_grad_u += 0.5 * dt * (traj[k - 1].grad_u_sq + s.grad_u_sq);
      cum_lap_q += 0.5 * dt * (traj[k - 1].lap_Q_sq + s.lap_Q_sq);
    }
    r.t.push_back(s.t);
    r.h1_series.push_back(s.h1_Q);
    r.aggregate13.push_back(s.l2_u * s.l2_u + 2.0 * p.nu * cum_grad_u +
                            p.L * s.grad_Q_sq +
                            p.Gamma * p.L * p.L * cum_lap_q);
  }

  // Least-squares exponential envelope on the log-transformed H1 series.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (r.h1_series[k] <= 0.0) continue;
    const double x = r.t[k], y = std::log(r.h1_series[k]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++n;
  }
  if (n >= 2) {
    const double denom = n * sxx - sx * sx;
    r.fit_log_slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
    r.fit_log_intercept = (sy - r.fit_log_slope * sx) / n;
  }
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double env = std::exp(r.fit_log_intercept + r.fit_log_slope * r.t[k]);
    if (r.h1_series[k] > 1.05 * env) ++r.exceed_count;
  }
  return r;
}

}  // namespace beqt
