#include "doctest.h"

#include <algorithm>
#include <string>

#include "beqt/harness.hpp"

using namespace beqt;

namespace {

RunConfig small_config() {
  RunConfig cfg = parse_config_text(
      "grid.N = 32\n"
      "params.a = 1\n"
      "stepper.dt = 0.001\n"
      "initial.seed = 4\n"
      "initial.kmax = 4\n"
      "run.T = 0.02\n"
      "run.cadence = 5\n");
  return cfg;
}

}  // namespace

TEST_CASE("csv header contract") {
  CHECK(series_csv_header() ==
        "t,E_total,E_kin,E_elastic,E_bulk,diss_visc,diss_rot,lyap_residual,"
        "H1_Q,L2_u,phi,phi1,phi2,Linf_Q,log_embed_ratio");
  SeriesRow r;
  const std::string row = series_csv_row(r);
  // 15 columns, '.' decimal, ',' separator.
  CHECK(std::count(row.begin(), row.end(), ',') == 14);
}

TEST_CASE("simulation artifacts and determinism") {
  const RunConfig cfg = small_config();
  const RunArtifacts a = run_simulation(cfg);
  const RunArtifacts b = run_simulation(cfg);
  CHECK(!a.blew_up);
  CHECK(a.rows.size() == b.rows.size());
  CHECK(a.rows.size() == 5);  // initial + steps 5, 10, 15, 20
  for (std::size_t k = 0; k < a.rows.size(); ++k)
    CHECK(series_csv_row(a.rows[k]) == series_csv_row(b.rows[k]));  // bit-identical
}

TEST_CASE("embedding") {
  auto gc = SpectralGrid::make(32);
  auto gf = SpectralGrid::make(64);
  const ScalarField f = random_band_scalar(gc, 8, 9);
  const ScalarField e = embed(f, gf);
  CHECK(l2_norm(e) == doctest::Approx(l2_norm(f)).epsilon(1e-13));
  CHECK_THROWS(embed(embed(f, gf), gc));

  // Physical samples agree on the coarse lattice points.
  const auto pc = f.to_physical();
  const auto pf = e.to_physical();
  double maxdiff = 0.0;
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j)
      maxdiff = std::max(maxdiff, std::abs(pc[static_cast<std::size_t>(i) * 32 + j] -
                                           pf[static_cast<std::size_t>(2 * i) * 64 + 2 * j]));
  CHECK(maxdiff <= 1e-12);
}

TEST_CASE("twin run at equal resolutions is identically zero") {
  RunConfig cfg = small_config();
  const TwinRunReport rep = twin_run(cfg, 32, 32);
  CHECK(rep.sup_denergy <= 1e-24);
  CHECK(!rep.samples.empty());
  CHECK(rep.samples.front().denergy == 0.0);
}

TEST_CASE("twin run rejects unresolvable initial data") {
  RunConfig cfg = small_config();
  cfg.kmax = 12;  // beyond the N=32 mask (|k_j| < 32/3)
  CHECK_THROWS(twin_run(cfg, 32, 64));
}
