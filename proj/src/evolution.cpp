#include "beqt/evolution.hpp"

#include <cmath>
#include <numbers>

#include "beqt/parallel.hpp"
#include "beqt/spectral_ops.hpp"

namespace beqt {

namespace {

// RAII switch for the Galerkin product wrapping.
struct MollifierGuard {
  explicit MollifierGuard(int n) : prev_(product_mollifier()) {
    if (n > 0) set_product_mollifier(n);
  }
  ~MollifierGuard() { set_product_mollifier(prev_); }
  int prev_;
};

void check_finite(const SimState& s, const char* where) {
  if (!all_finite(s.Q)) throw BlowUpError(s.t, std::string(where) + ": Q");
  if (!all_finite(s.u)) throw BlowUpError(s.t, std::string(where) + ": u");
}

ScalarField advect(const VectorField& u, const ScalarField& f) {
  return multiply(u.x, derivative(f, 1, 0)) + multiply(u.y, derivative(f, 0, 1));
}

QTensorField q_explicit(const SimState& s) {
  QTensorField out(s.grid());
  out.q11 = -1.0 * advect(s.u, s.Q.q11);
  out.q12 = -1.0 * advect(s.u, s.Q.q12);
  const QTensorField S = compute_S(s.u, s.Q, s.params);
  out += S;
  QTensorField bulk = bulk_force_field(s.Q, s.params);
  out += s.params.Gamma * bulk;
  return out;
}

VectorField u_explicit(const SimState& s) {
  const QTensorField h = compute_H(s.Q, s.params);
  const TensorField tau = stress_tau(s.Q, h, s.params);
  const TensorField sig = stress_sigma(s.Q, h);
  VectorField force = tensor_divergence(tau);
  force += tensor_divergence(sig);
  force.x -= advect(s.u, s.u.x);
  force.y -= advect(s.u, s.u.y);
  return leray_project(force);
}

// Divide each mode by (c0 + dt_coeff k^2).
void implicit_divide(ScalarField& f, double c0, double dt_coeff) {
  const auto& g = *f.grid();
  par::for_n(g.size(), [&](std::size_t m) {
    f.hat()[m] /= (c0 + dt_coeff * g.ksq(m));
  });
}

}  // namespace

QTensorField rhs_Q_explicit(const SimState& s) {
  check_finite(s, "rhs_Q");
  MollifierGuard guard(s.galerkin_n);
  return q_explicit(s);
}

VectorField rhs_u_explicit(const SimState& s) {
  check_finite(s, "rhs_u");
  MollifierGuard guard(s.galerkin_n);
  return u_explicit(s);
}

QTensorField rhs_Q(const SimState& s) {
  QTensorField out = rhs_Q_explicit(s);
  const double gl = s.params.Gamma * s.params.L;
  out.q11 += gl * laplacian(s.Q.q11);
  out.q12 += gl * laplacian(s.Q.q12);
  return out;
}

VectorField rhs_u(const SimState& s) {
  VectorField out = rhs_u_explicit(s);
  out.x += s.params.nu * laplacian(s.u.x);
  out.y += s.params.nu * laplacian(s.u.y);
  return out;
}

SimState Stepper::step(const SimState& s) {
  check_finite(s, "step input");
  const double dt = cfg_.dt;

  if (cfg_.cfl_max > 0.0) {
    const double umax = std::max(linf_norm(s.u.x), linf_norm(s.u.y));
    const double dx = 2.0 * std::numbers::pi / s.grid()->N();
    const double cfl = umax * dt / dx;
    if (cfl > cfg_.cfl_max) throw CflViolation(s.t, cfl, cfg_.cfl_max);
  }

  MollifierGuard guard(s.galerkin_n);

  QTensorField eq = q_explicit(s);
  VectorField eu = cfg_.freeze_u ? VectorField(s.grid()) : u_explicit(s);

  const double gl = s.params.Gamma * s.params.L;
  SimState out = s;
  out.t = s.t + dt;

  const bool sbdf2 = cfg_.scheme == Scheme::ImexSbdf2 && have_prev_;
  if (sbdf2) {
    // (3/2 + dt lambda k^2) y_{n+1} = 2 y_n - 1/2 y_{n-1} + dt (2 E_n - E_{n-1})
    out.Q.q11 = 2.0 * ScalarField(s.Q.q11);
    out.Q.q12 = 2.0 * ScalarField(s.Q.q12);
    out.Q.q11 += dt * (2.0 * ScalarField(eq.q11) - prev_eq_.q11);
    out.Q.q12 += dt * (2.0 * ScalarField(eq.q12) - prev_eq_.q12);
    out.Q.q11 -= 0.5 * prev_q_.q11;
    out.Q.q12 -= 0.5 * prev_q_.q12;
    implicit_divide(out.Q.q11, 1.5, dt * gl);
    implicit_divide(out.Q.q12, 1.5, dt * gl);

    if (!cfg_.freeze_u) {
      out.u.x = 2.0 * ScalarField(s.u.x);
      out.u.y = 2.0 * ScalarField(s.u.y);
      out.u.x += dt * (2.0 * ScalarField(eu.x) - prev_eu_.x);
      out.u.y += dt * (2.0 * ScalarField(eu.y) - prev_eu_.y);
      out.u.x -= 0.5 * prev_u_.x;
      out.u.y -= 0.5 * prev_u_.y;
      implicit_divide(out.u.x, 1.5, dt * s.params.nu);
      implicit_divide(out.u.y, 1.5, dt * s.params.nu);
      out.u = leray_project(out.u);
    }
  } else {
    // IMEX Euler: (1 + dt lambda k^2) y_{n+1} = y_n + dt E_n
    out.Q.q11 = ScalarField(s.Q.q11) + dt * eq.q11;
    out.Q.q12 = ScalarField(s.Q.q12) + dt * eq.q12;
    implicit_divide(out.Q.q11, 1.0, dt * gl);
    implicit_divide(out.Q.q12, 1.0, dt * gl);
    if (!cfg_.freeze_u) {
      out.u.x = ScalarField(s.u.x) + dt * eu.x;
      out.u.y = ScalarField(s.u.y) + dt * eu.y;
      implicit_divide(out.u.x, 1.0, dt * s.params.nu);
      implicit_divide(out.u.y, 1.0, dt * s.params.nu);
      out.u = leray_project(out.u);
    }
  }

  prev_eq_ = std::move(eq);
  prev_eu_ = std::move(eu);
  prev_q_ = s.Q;
  prev_u_ = s.u;
  have_prev_ = true;

  check_finite(out, "step output");
  return out;
}

void run(SimState& state, const StepperConfig& cfg, double T, int cadence,
         const std::function<void(const SimState&)>& observer) {
  if (T < state.t) throw std::invalid_argument("run: T must be >= initial time");
  if (cadence < 1) throw std::invalid_argument("run: cadence must be >= 1");

  if (state.galerkin_n > 0) {
    state.Q = mollify_Jn(state.Q, state.galerkin_n);
    state.u = leray_project(mollify_Jn(state.u, state.galerkin_n));
  }

  if (observer) observer(state);
  if (T == state.t) return;

  Stepper stepper(cfg);
  const long long nsteps =
      static_cast<long long>(std::llround((T - state.t) / cfg.dt));
  for (long long k = 0; k < nsteps; ++k) {
    state = stepper.step(state);
    const bool last = (k + 1 == nsteps);
    if (observer && ((k + 1) % cadence == 0 || last)) observer(state);
  }
}

}  // namespace beqt
