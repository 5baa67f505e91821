#pragma once

#include <utility>
#include <vector>

#include "beqt/evolution.hpp"
#include "beqt/field.hpp"
#include "beqt/qtensor.hpp"

namespace beqt {

// Decomposed energy E(t) and the two dissipation functionals.
struct EnergyReport {
  double t = 0.0;
  double kinetic = 0.0;          // 1/2 int |u|^2
  double elastic = 0.0;          // L/2 int |grad Q|^2
  double bulk = 0.0;             // int a/2 tr Q^2 - b/3 tr Q^3 + c/4 tr^2(Q^2)
  double total = 0.0;
  double diss_viscous = 0.0;     // nu int |grad u|^2
  double diss_rotational = 0.0;  // Gamma int tr(H^2)
};

// (elastic, bulk) parts of the free energy, spectral-exact quadrature.
std::pair<double, double> free_energy(const QTensorField& q, const ModelParams& p);

EnergyReport total_energy(const SimState& s);

struct LyapunovResidualReport {
  std::vector<double> residuals;  // one per sample interval, midpoint rule
  double max_abs = 0.0;
};

// r_k = (E_{k+1} - E_k)/dt + midpoint dissipation; needs >= 3 samples.
LyapunovResidualReport lyapunov_residual(const std::vector<EnergyReport>& traj);

// Discrete form of the co-rotational cancellation:
//   int tr((Omega Q' - Q' Omega) Delta Q) - int d_b(Q' DQ - DQ Q')_{ab} u_a.
double lemma1_residual(const QTensorField& qprime, const QTensorField& q,
                       const VectorField& u);

// Pointwise coercivity bound (A^2/2 + a/2)|Q|^2 - (b/3) tr Q^3 + (c/4)|Q|^4 >= 0,
// with the cubic trace bounded through the delta-inequality in d=3.
bool coercivity_check_pointwise(const QTensor& q, double A, double delta,
                                const ModelParams& p);
// Integrated version on the 2D grid.
bool coercivity_check(const QTensorField& q, double A, double delta,
                      const ModelParams& p);

struct TrajectorySample {
  double t = 0.0;
  double h1_Q = 0.0;
  double l2_u = 0.0;
  double grad_u_sq = 0.0;
  double grad_Q_sq = 0.0;
  double lap_Q_sq = 0.0;
};

struct AprioriReport {
  std::vector<double> t;
  std::vector<double> h1_series;
  std::vector<double> aggregate13;  // |u|^2 + 2 nu cum + L |grad Q|^2 + Gamma L^2 cum
  double fit_log_intercept = 0.0;   // h1 ~ exp(intercept + slope t)
  double fit_log_slope = 0.0;
  int exceed_count = 0;             // samples > 5% above the fitted envelope
  bool finite = true;
};

AprioriReport apriori_monitor(const std::vector<TrajectorySample>& traj,
                              const ModelParams& p);

TrajectorySample sample_trajectory(const SimState& s);

}  // namespace beqt
