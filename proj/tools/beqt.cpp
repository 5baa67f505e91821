#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "beqt/checkpoint.hpp"
#include "beqt/config.hpp"
#include "beqt/energy.hpp"
#include "beqt/harness.hpp"
#include "beqt/littlewood_paley.hpp"
#include "beqt/verify.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitBlowUp = 3;

int cmd_simulate(const std::string& config_path, std::uint64_t seed, bool seed_override,
                 const std::string& out_dir, bool quiet) {
  beqt::RunConfig cfg = beqt::parse_config_file(config_path);
  if (seed_override) cfg.seed = seed;
  const std::string out = out_dir.empty() ? cfg.out_dir : out_dir;
  const beqt::RunArtifacts art = beqt::run_simulation(cfg);
  beqt::write_artifacts(art, cfg, out);
  if (art.blew_up) {
    if (!quiet)
      std::cerr << "blow-up at t=" << art.blowup_t << " (" << art.blowup_where
                << "); forensics written to " << out << "/forensics.json\n";
    return kExitBlowUp;
  }
  if (!quiet)
    std::cout << "completed " << art.rows.size() << " samples; artifacts in " << out << "\n";
  return 0;
}

int cmd_twin(const std::string& config_path, std::uint64_t seed, bool seed_override,
             const std::string& out_dir, int n_coarse, int n_fine, bool quiet) {
  beqt::RunConfig cfg = beqt::parse_config_file(config_path);
  if (seed_override) cfg.seed = seed;
  const beqt::TwinRunReport rep = beqt::twin_run(cfg, n_coarse, n_fine);
  const std::string out = out_dir.empty() ? cfg.out_dir : out_dir;
  std::filesystem::create_directories(out);
  beqt::write_twin_csv(rep, (std::filesystem::path(out) / "twin.csv").string());
  if (!quiet)
    std::cout << "twin " << n_coarse << " vs " << n_fine
              << ": sup delta-energy = " << rep.sup_denergy << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out_dir,
               bool quiet) {
  const auto results = beqt::run_suites(suite, seed);
  nlohmann::json j = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json e;
    e["suite"] = r.name;
    e["passed"] = r.passed;
    for (const auto& [k, v] : r.metrics) e["metrics"][k] = v;
    j.push_back(e);
    all = all && r.passed;
    if (!quiet)
      std::cout << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream(std::filesystem::path(out_dir) / "verify.json") << j.dump(2) << '\n';
  } else if (quiet) {
    std::cout << j.dump(2) << "\n";
  }
  return all ? 0 : kExitError;
}

int cmd_spectrum(const std::string& ckpt, const std::string& out_dir, bool quiet) {
  const beqt::SimState s = beqt::checkpoint_read(ckpt);
  beqt::DyadicFrame frame(s.grid());
  std::string csv = "kind,t,index,value\n";
  const auto add_field = [&](const std::string& tag, const beqt::ScalarField& f) {
    const auto sp = frame.shell_spectrum(f);
    csv += "shell_" + tag + "," + std::to_string(s.t) + ",-1," + std::to_string(sp.s0_norm) + "\n";
    for (std::size_t q = 0; q < sp.shell_norms.size(); ++q)
      csv += "shell_" + tag + "," + std::to_string(s.t) + "," + std::to_string(q) + "," +
             std::to_string(sp.shell_norms[q]) + "\n";
    for (double sv : {0.0, 1.0, 2.0})
      csv += "sobolev_" + tag + "," + std::to_string(s.t) + "," + std::to_string(sv) + "," +
             std::to_string(frame.sobolev_norm(f, sv)) + "\n";
  };
  add_field("q11", s.Q.q11);
  add_field("q12", s.Q.q12);
  add_field("ux", s.u.x);
  add_field("uy", s.u.y);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream os(std::filesystem::path(out_dir) / "spectrum.csv", std::ios::binary);
    os << csv;
    if (!quiet) std::cout << "spectrum written to " << out_dir << "/spectrum.csv\n";
  } else {
    std::cout << csv;
  }
  return 0;
}

int cmd_energy(const std::string& ckpt, bool quiet) {
  const beqt::SimState s = beqt::checkpoint_read(ckpt);
  const beqt::EnergyReport r = beqt::total_energy(s);
  nlohmann::json j;
  j["t"] = r.t;
  j["kinetic"] = r.kinetic;
  j["elastic"] = r.elastic;
  j["bulk"] = r.bulk;
  j["total"] = r.total;
  j["diss_viscous"] = r.diss_viscous;
  j["diss_rotational"] = r.diss_rotational;
  (void)quiet;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral Q-tensor/Navier-Stokes simulator and verifier"};
  app.require_subcommand(1);

  std::string config_path, out_dir, suite, ckpt_path;
  std::uint64_t seed = 0;
  bool quiet = false;
  int n_coarse = 64, n_fine = 256;

  auto* sim = app.add_subcommand("simulate", "run a simulation from a config");
  sim->add_option("--config", config_path, "config file")->required();
  auto* sim_seed = sim->add_option("--seed", seed, "override initial.seed");
  sim->add_option("--out", out_dir, "output directory");
  sim->add_flag("--quiet", quiet);

  auto* twin = app.add_subcommand("twin", "coarse-vs-fine twin comparison");
  twin->add_option("--config", config_path, "config file")->required();
  auto* twin_seed = twin->add_option("--seed", seed, "override initial.seed");
  twin->add_option("--out", out_dir, "output directory");
  twin->add_option("--coarse", n_coarse, "coarse resolution");
  twin->add_option("--fine", n_fine, "fine resolution");
  twin->add_flag("--quiet", quiet);

  auto* ver = app.add_subcommand("verify", "run the property suites");
  ver->add_option("--suite", suite, "suite selector (default: all)");
  ver->add_option("--seed", seed, "sample seed")->default_val(20260101);
  ver->add_option("--out", out_dir, "write verify.json here");
  ver->add_flag("--quiet", quiet);

  auto* spec = app.add_subcommand("spectrum", "shell report from a checkpoint");
  spec->add_option("checkpoint", ckpt_path, "checkpoint file")->required();
  spec->add_option("--out", out_dir, "output directory");
  spec->add_flag("--quiet", quiet);

  auto* ene = app.add_subcommand("energy", "energy report from a checkpoint");
  ene->add_option("checkpoint", ckpt_path, "checkpoint file")->required();
  ene->add_flag("--quiet", quiet);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed())
      return cmd_simulate(config_path, seed, sim_seed->count() > 0, out_dir, quiet);
    if (twin->parsed())
      return cmd_twin(config_path, seed, twin_seed->count() > 0, out_dir, n_coarse, n_fine,
                      quiet);
    if (ver->parsed()) return cmd_verify(suite, seed, out_dir, quiet);
    if (spec->parsed()) return cmd_spectrum(ckpt_path, out_dir, quiet);
    if (ene->parsed()) return cmd_energy(ckpt_path, quiet);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
