#include "beqt/harness.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "beqt/checkpoint.hpp"

#include "json.hpp"

namespace beqt {

namespace {

// Shortest round-trippable decimal, '.' decimal point regardless of locale.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string series_csv_header() {
  return "t,E_total,E_kin,E_elastic,E_bulk,diss_visc,diss_rot,lyap_residual,"
         "H1_Q,L2_u,phi,phi1,phi2,Linf_Q,log_embed_ratio";
}

std::string series_csv_row(const SeriesRow& r) {
  std::string out;
  const double cols[] = {r.t, r.energy.total, r.energy.kinetic, r.energy.elastic,
                         r.energy.bulk, r.energy.diss_viscous, r.energy.diss_rotational,
                         r.lyap_residual, r.h1_Q, r.l2_u, r.phi, r.phi1, r.phi2,
                         r.linf_Q, r.log_embed_ratio};
  for (std::size_t i = 0; i < std::size(cols); ++i) {
    if (i) out += ',';
    out += fmt(cols[i]);
  }
  return out;
}

void write_series_csv(const std::vector<SeriesRow>& rows, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << series_csv_header() << '\n';
  for (const auto& r : rows) os << series_csv_row(r) << '\n';
}

void SeriesRecorder::observe(const SimState& state) {
  SeriesRow row;
  row.t = state.t;
  row.energy = total_energy(state);
  row.h1_Q = h1_norm(state.Q);
  row.l2_u = l2_norm(state.u);
  DyadicFrame frame(state.grid());
  const auto split = frame.phi_split(state, s_);
  row.phi = split.phi;
  row.phi1 = split.phi1;
  row.phi2 = split.phi2;
  row.linf_Q = linf_norm(state.Q);
  if (row.h1_Q > 0.0) row.log_embed_ratio = frame.log_embedding_monitor(state.Q, s_).ratio;
  if (!rows_.empty()) {
    const auto& prev = rows_.back();
    const double dt = row.t - prev.t;
    if (dt > 0.0) {
      const double dE = (row.energy.total - prev.energy.total) / dt;
      const double diss = 0.5 * (prev.energy.diss_viscous + prev.energy.diss_rotational +
                                 row.energy.diss_viscous + row.energy.diss_rotational);
      row.lyap_residual = dE + diss;
    }
  }
  rows_.push_back(std::move(row));
}

std::vector<EnergyReport> SeriesRecorder::energy_trajectory() const {
  std::vector<EnergyReport> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.energy);
  return out;
}

RunArtifacts run_simulation(const RunConfig& cfg) {
  RunArtifacts art;
  SimState state = build_initial_state(cfg);
  SeriesRecorder rec;
  try {
    run(state, cfg.stepper, cfg.T, cfg.cadence,
        [&rec](const SimState& s) { rec.observe(s); });
  } catch (const BlowUpError& e) {
    art.blew_up = true;
    art.blowup_t = e.time();
    art.blowup_where = e.where();
  } catch (const CflViolation& e) {
    art.blew_up = true;
    art.blowup_t = e.time();
    art.blowup_where = "cfl-guard";
  }
  art.rows = rec.rows();
  art.final_state = std::move(state);
  return art;
}

void write_artifacts(const RunArtifacts& art, const RunConfig& cfg,
                     const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  write_series_csv(art.rows, (fs::path(out_dir) / "series.csv").string());

  nlohmann::json j;
  j["N"] = cfg.N;
  j["T"] = cfg.T;
  j["dt"] = cfg.stepper.dt;
  j["seed"] = cfg.seed;
  j["generator"] = cfg.generator;
  j["samples"] = art.rows.size();
  j["blew_up"] = art.blew_up;
  if (!art.rows.empty()) {
    j["E_initial"] = art.rows.front().energy.total;
    j["E_final"] = art.rows.back().energy.total;
    double max_lyap = 0.0;
    for (const auto& r : art.rows) max_lyap = std::max(max_lyap, std::abs(r.lyap_residual));
    j["max_lyap_residual"] = max_lyap;
  }
  if (art.blew_up) {
    nlohmann::json f;
    f["t"] = art.blowup_t;
    f["where"] = art.blowup_where;
    f["last_sample_t"] = art.rows.empty() ? 0.0 : art.rows.back().t;
    std::ofstream(fs::path(out_dir) / "forensics.json") << f.dump(2) << '\n';
  } else {
    checkpoint_write(art.final_state, (fs::path(out_dir) / "final.ckpt").string());
  }
  std::ofstream(fs::path(out_dir) / "summary.json") << j.dump(2) << '\n';
}

ScalarField embed(const ScalarField& f, const SpectralGrid::Ptr& fine) {
  const auto& gc = *f.grid();
  const int Nc = gc.N();
  const int Nf = fine->N();
  if (Nf < Nc) throw std::invalid_argument("embed: target grid is coarser");
  ScalarField out(fine);
  for (std::size_t m = 0; m < gc.size(); ++m) {
    const int k1 = gc.k1(m), k2 = gc.k2(m);
    if (k1 == -Nc / 2 || k2 == -Nc / 2) continue;  // ambiguous Nyquist rows
    const int a = k1 >= 0 ? k1 : k1 + Nf;
    const int b = k2 >= 0 ? k2 : k2 + Nf;
    out.hat()[static_cast<std::size_t>(a) * Nf + b] = f.hat()[m];
  }
  return out;
}

QTensorField embed(const QTensorField& q, const SpectralGrid::Ptr& fine) {
  QTensorField out;
  out.q11 = embed(q.q11, fine);
  out.q12 = embed(q.q12, fine);
  return out;
}

VectorField embed(const VectorField& u, const SpectralGrid::Ptr& fine) {
  VectorField out;
  out.x = embed(u.x, fine);
  out.y = embed(u.y, fine);
  return out;
}

TwinRunReport twin_run(const RunConfig& cfg, int n_coarse, int n_fine) {
  if (n_coarse > n_fine) throw std::invalid_argument("twin_run: need N_coarse <= N_fine");
  RunConfig cc = cfg;
  cc.N = n_coarse;
  RunConfig cf = cfg;
  cf.N = n_fine;
  SimState sc = build_initial_state(cc);
  SimState sf = build_initial_state(cf);

  // Shared data must live inside the coarse dealias mask; content beyond it
  // is silently truncated by the coarse dynamics and poisons the comparison.
  {
    const double outside = l2_norm(sc.Q - dealias(sc.Q)) + l2_norm(sc.u - dealias(sc.u));
    if (outside > 1e-12)
      throw std::invalid_argument("twin_run: initial data not band-limited to the coarse grid");
  }

  TwinRunReport rep;
  rep.n_coarse = n_coarse;
  rep.n_fine = n_fine;

  auto sample = [&]() {
    const QTensorField dq = embed(sc.Q, sf.grid()) - sf.Q;
    const VectorField du = embed(sc.u, sf.grid()) - sf.u;
    TwinSample s;
    s.t = sc.t;
    s.dq_l2 = l2_norm(dq);
    s.dgrad_q_l2 = grad_l2_norm(dq);
    s.du_l2 = l2_norm(du);
    s.denergy = 0.5 * cfg.params.L * s.dgrad_q_l2 * s.dgrad_q_l2 +
                0.5 * s.dq_l2 * s.dq_l2 + 0.5 * s.du_l2 * s.du_l2;
    rep.samples.push_back(s);
    rep.sup_denergy = std::max(rep.sup_denergy, s.denergy);
  };

  Stepper stc(cfg.stepper), stf(cfg.stepper);
  const long long nsteps = std::llround(cfg.T / cfg.stepper.dt);
  sample();
  for (long long k = 0; k < nsteps; ++k) {
    sc = stc.step(sc);
    sf = stf.step(sf);
    if ((k + 1) % cfg.cadence == 0 || k + 1 == nsteps) sample();
  }
  return rep;
}

void write_twin_csv(const TwinRunReport& rep, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << "t,dQ_L2,dgradQ_L2,du_L2,denergy\n";
  for (const auto& s : rep.samples)
    os << fmt(s.t) << ',' << fmt(s.dq_l2) << ',' << fmt(s.dgrad_q_l2) << ','
       << fmt(s.du_l2) << ',' << fmt(s.denergy) << '\n';
}

}  // namespace beqt
