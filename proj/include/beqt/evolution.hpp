#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "beqt/field.hpp"
#include "beqt/model_terms.hpp"
#include "beqt/qtensor.hpp"

namespace beqt {

// Coupled (Q, u) state on a common grid.
struct SimState {
  double t = 0.0;
  QTensorField Q;
  VectorField u;
  ModelParams params;
  int galerkin_n = 0;  // 0 = plain pseudo-spectral; > 0 = mollified Galerkin

  const SpectralGrid::Ptr& grid() const { return Q.grid(); }
};

enum class Scheme { ImexEuler, ImexSbdf2 };

struct StepperConfig {
  double dt = 1e-3;
  Scheme scheme = Scheme::ImexSbdf2;
  double cfl_max = 0.0;    // 0 disables the advective CFL guard
  bool freeze_u = false;   // hold u fixed (linearized Q tests)
};

// Raised when a step produces NaN/Inf; carries the forensic record.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(double t, std::string where)
      : std::runtime_error("blow-up detected at t=" + std::to_string(t) + " in " + where),
        t_(t), where_(std::move(where)) {}
  double time() const { return t_; }
  const std::string& where() const { return where_; }

 private:
  double t_;
  std::string where_;
};

class CflViolation : public std::runtime_error {
 public:
  CflViolation(double t, double cfl, double limit)
      : std::runtime_error("CFL guard tripped at t=" + std::to_string(t) +
                           ": cfl=" + std::to_string(cfl) + " > " + std::to_string(limit)),
        t_(t) {}
  double time() const { return t_; }

 private:
  double t_;
};

// Full right-hand sides of the coupled system (diffusion included);
// rhs_u is Leray-projected. In Galerkin mode products are J_n-wrapped.
QTensorField rhs_Q(const SimState& s);
VectorField rhs_u(const SimState& s);

// Explicit parts only (everything except Gamma L Laplacian Q and nu Laplacian u).
QTensorField rhs_Q_explicit(const SimState& s);
VectorField rhs_u_explicit(const SimState& s);

// IMEX stepper: diffusion implicit with exact per-mode divisors, the rest
// explicit. SBDF2 bootstraps with one IMEX-Euler step.
class Stepper {
 public:
  explicit Stepper(StepperConfig cfg) : cfg_(cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("Stepper: dt must be > 0");
  }

  const StepperConfig& config() const { return cfg_; }

  SimState step(const SimState& s);
  void reset() { have_prev_ = false; }

 private:
  StepperConfig cfg_;
  bool have_prev_ = false;
  QTensorField prev_eq_;
  VectorField prev_eu_;
  QTensorField prev_q_;
  VectorField prev_u_;
};

// Advances state to time T, invoking the observer on the initial state,
// every `cadence` steps, and on the final state.
void run(SimState& state, const StepperConfig& cfg, double T, int cadence,
         const std::function<void(const SimState&)>& observer);

}  // namespace beqt
