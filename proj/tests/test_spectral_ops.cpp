#include "doctest.h"

#include <cmath>

#include "beqt/initial_data.hpp"
#include "beqt/spectral_ops.hpp"

using namespace beqt;

TEST_CASE("Leray projection") {
  auto g = SpectralGrid::make(32);
  VectorField v(g);
  v.x = random_band_scalar(g, 1, 8);
  v.y = random_band_scalar(g, 2, 8);

  const VectorField p1 = leray_project(v);
  CHECK(divergence_linf(p1) <= 1e-13);

  // Idempotent within 1e-15 after one projection.
  const VectorField p2 = leray_project(p1);
  for (std::size_t m = 0; m < g->size(); ++m) {
    CHECK(std::abs(p1.x.hat()[m] - p2.x.hat()[m]) <= 1e-15);
    CHECK(std::abs(p1.y.hat()[m] - p2.y.hat()[m]) <= 1e-15);
  }

  // Divergence-free input passes through unchanged.
  const VectorField tg = taylor_green(g, 1.3);
  const VectorField ptg = leray_project(tg);
  double maxdiff = 0.0;
  for (std::size_t m = 0; m < g->size(); ++m) {
    maxdiff = std::max(maxdiff, std::abs(ptg.x.hat()[m] - tg.x.hat()[m]));
    maxdiff = std::max(maxdiff, std::abs(ptg.y.hat()[m] - tg.y.hat()[m]));
  }
  CHECK(maxdiff <= 1e-15);

  // Mean mode untouched.
  VectorField c(g);
  c.x.hat()[0] = 2.5;
  const VectorField pc = leray_project(c);
  CHECK(pc.x.hat()[0] == std::complex<double>(2.5));
}

TEST_CASE("Friedrichs mollifier") {
  auto g = SpectralGrid::make(32);
  ScalarField f = random_band_scalar(g, 3, 12);
  f.hat()[0] = 1.0;  // add a mean

  CHECK_THROWS(mollify_Jn(f, 0));

  const ScalarField m1 = mollify_Jn(f, 5);
  CHECK(m1.hat()[0] == std::complex<double>(0.0));  // mean removed
  for (std::size_t m = 0; m < g->size(); ++m) {
    const double k = std::sqrt(g->ksq(m));
    if (k >= 1.0 && k <= 5.0)
      CHECK(m1.hat()[m] == f.hat()[m]);
    else
      CHECK(m1.hat()[m] == std::complex<double>(0.0));
  }

  // Idempotence, bitwise.
  const ScalarField m2 = mollify_Jn(m1, 5);
  for (std::size_t m = 0; m < g->size(); ++m) CHECK(m1.hat()[m] == m2.hat()[m]);

  CHECK(energy_outside_annulus(m1, 5) == 0.0);
  CHECK(energy_outside_annulus(f, 5) > 0.0);
}
