#pragma once

#include <string>
#include <vector>

#include "beqt/config.hpp"
#include "beqt/energy.hpp"
#include "beqt/evolution.hpp"
#include "beqt/littlewood_paley.hpp"

namespace beqt {

// One CSV row of the run time series; the column set is the external
// contract: t, E_total, E_kin, E_elastic, E_bulk, diss_visc, diss_rot,
// lyap_residual, H1_Q, L2_u, phi, phi1, phi2, Linf_Q, log_embed_ratio.
struct SeriesRow {
  double t = 0.0;
  EnergyReport energy;
  double lyap_residual = 0.0;
  double h1_Q = 0.0;
  double l2_u = 0.0;
  double phi = 0.0, phi1 = 0.0, phi2 = 0.0;
  double linf_Q = 0.0;
  double log_embed_ratio = 0.0;
};

std::string series_csv_header();
std::string series_csv_row(const SeriesRow& r);
void write_series_csv(const std::vector<SeriesRow>& rows, const std::string& path);

// Observes a run: energy/norm/phi sample per observation, the Lyapunov
// residual filled in from adjacent samples (s = H^s index of the phi split).
class SeriesRecorder {
 public:
  explicit SeriesRecorder(double s = 1.0) : s_(s) {}

  void observe(const SimState& state);
  const std::vector<SeriesRow>& rows() const { return rows_; }
  std::vector<EnergyReport> energy_trajectory() const;

 private:
  double s_;
  std::vector<SeriesRow> rows_;
};

struct RunArtifacts {
  std::vector<SeriesRow> rows;
  SimState final_state;
  bool blew_up = false;
  double blowup_t = 0.0;
  std::string blowup_where;
};

// Runs the configured simulation, recording the series; on blow-up the
// partial series and the forensic record are returned (no throw).
RunArtifacts run_simulation(const RunConfig& cfg);

// Writes series.csv, summary.json and final.ckpt (skipped after blow-up,
// which gets forensics.json instead) into out_dir.
void write_artifacts(const RunArtifacts& art, const RunConfig& cfg,
                     const std::string& out_dir);

// Zero-padding embedding of a coarse spectral state into a finer grid.
ScalarField embed(const ScalarField& f, const SpectralGrid::Ptr& fine);
QTensorField embed(const QTensorField& q, const SpectralGrid::Ptr& fine);
VectorField embed(const VectorField& u, const SpectralGrid::Ptr& fine);

struct TwinSample {
  double t = 0.0;
  double dq_l2 = 0.0;
  double dgrad_q_l2 = 0.0;
  double du_l2 = 0.0;
  double denergy = 0.0;  // (L/2)|grad dQ|^2 + 1/2 |dQ|^2 + 1/2 |du|^2
};

struct TwinRunReport {
  int n_coarse = 0;
  int n_fine = 0;
  std::vector<TwinSample> samples;
  double sup_denergy = 0.0;
};

// Runs the config at two resolutions from identical band-limited data and
// compares along the way (coarse state embedded into the fine grid).
TwinRunReport twin_run(const RunConfig& cfg, int n_coarse, int n_fine);

void write_twin_csv(const TwinRunReport& rep, const std::string& path);

}  // namespace beqt
