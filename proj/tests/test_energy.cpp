#include "doctest.h"

#include <cmath>
#include <numbers>

#include "beqt/energy.hpp"
#include "beqt/initial_data.hpp"
#include "beqt/model_terms.hpp"

using namespace beqt;
using std::numbers::pi;

TEST_CASE("free energy closed form for a constant Q") {
  auto g = SpectralGrid::make(32);
  ModelParams p;
  p.a = -0.5;
  p.c = 2.0;
  p.L = 3.0;
  QTensorField q(g);
  add_constant(q.q11, 0.3);  // tr Q^2 = 2 * 0.09 = 0.18
  const auto [elastic, bulk] = free_energy(q, p);
  CHECK(elastic == 0.0);
  const double tr2 = 0.18;
  const double density = 0.5 * p.a * tr2 + 0.25 * p.c * tr2 * tr2;
  CHECK(bulk == doctest::Approx(density * 4.0 * pi * pi).epsilon(1e-13));
}

TEST_CASE("energy report composition") {
  ModelParams p;
  p.a = 1.0;
  SimState s;
  s.params = p;
  InitialDataSpec spec;
  spec.seed = 77;
  s.Q = random_band_qtensor(SpectralGrid::make(32), 77, 6, 1.0);
  s.u = random_band_divfree(s.Q.grid(), 78, 6, 1.0);
  const EnergyReport r = total_energy(s);
  CHECK(r.total == doctest::Approx(r.kinetic + r.elastic + r.bulk).epsilon(1e-15));
  CHECK(r.kinetic == doctest::Approx(0.5).epsilon(1e-12));  // ||u|| = 1
  CHECK(r.diss_viscous >= 0.0);
  CHECK(r.diss_rotational >= 0.0);
}

TEST_CASE("lyapunov residual needs three samples") {
  std::vector<EnergyReport> traj(2);
  CHECK_THROWS(lyapunov_residual(traj));
}

TEST_CASE("lemma1 discrete identity") {
  auto g = SpectralGrid::make(64);
  for (int k = 0; k < 5; ++k) {
    const QTensorField qp = random_band_qtensor(g, 300 + 3 * k, 10, 1.0);
    const QTensorField q = random_band_qtensor(g, 301 + 3 * k, 10, 1.0);
    const VectorField u = random_band_divfree(g, 302 + 3 * k, 10, 1.0);
    const QTensorField lap{laplacian(q.q11), laplacian(q.q12)};
    const double scale = l2_norm(qp) * l2_norm(lap) * grad_l2_norm(u);
    CHECK(std::abs(lemma1_residual(qp, q, u)) <= 1e-10 * scale);
  }
}

TEST_CASE("coercivity") {
  ModelParams p;
  p.a = -1.0;
  p.b = 1.0;
  p.c = 1.0;
  p.dim = 3;
  // A^2/2 >= |a|/2 + cubic slack makes the pointwise bound hold for random Q.
  for (int k = 0; k < 100; ++k) {
    const QTensor q = random_traceless_symmetric(500 + k, 3, 1.0);
    CHECK(coercivity_check_pointwise(q, 3.0, 1.0, p));
  }
  auto g = SpectralGrid::make(32);
  ModelParams p2;
  p2.a = -1.0;
  p2.c = 1.0;
  const QTensorField qf = random_band_qtensor(g, 900, 6, 1.0);
  CHECK(coercivity_check(qf, 2.0, 1.0, p2));
}

TEST_CASE("apriori monitor on a synthetic decaying trajectory") {
  ModelParams p;
  std::vector<TrajectorySample> traj;
  for (int k = 0; k <= 50; ++k) {
    TrajectorySample s;
    s.t = 0.01 * k;
    s.h1_Q = std::exp(-0.7 * s.t);
    s.l2_u = std::exp(-1.1 * s.t);
    s.grad_u_sq = s.l2_u * s.l2_u;
    s.grad_Q_sq = s.h1_Q * s.h1_Q;
    s.lap_Q_sq = s.h1_Q * s.h1_Q;
    traj.push_back(s);
  }
  const AprioriReport r = apriori_monitor(traj, p);
  CHECK(r.finite);
  CHECK(r.fit_log_slope == doctest::Approx(-0.7).epsilon(1e-6));
  CHECK(r.exceed_count == 0);
  // aggregate13 is nondecreasing in its cumulative pieces and finite
  for (double v : r.aggregate13) CHECK(std::isfinite(v));
}
