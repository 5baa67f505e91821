#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "beqt/evolution.hpp"
#include "beqt/grid.hpp"
#include "beqt/initial_data.hpp"

namespace beqt {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg)
      : std::runtime_error("config: " + msg) {}
};

// Flat dotted-key run description. File format: one "key = value" per line,
// '#' comments, unknown keys are hard errors. Seeds are mandatory.
struct RunConfig {
  int N = 64;
  DealiasRule dealias = DealiasRule::TwoThirds;
  ModelParams params;
  StepperConfig stepper;
  int galerkin_n = 0;

  std::string generator = "random-band";  // random-band | uniaxial-winding | taylor-green
  std::uint64_t seed = 0;
  bool seed_set = false;
  int kmax = 8;
  double u_l2 = 1.0;
  double q_h1 = 1.0;
  double winding_s = 0.5;
  int winding_w1 = 1;
  int winding_w2 = 0;
  double u_amplitude = 1.0;

  double T = 1.0;
  int cadence = 10;
  std::string out_dir = ".";

  void validate() const;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// Builds the initial state described by the config (grid, params, data).
SimState build_initial_state(const RunConfig& cfg);

}  // namespace beqt
