#pragma once

#include <vector>

#include "beqt/evolution.hpp"
#include "beqt/field.hpp"

namespace beqt {

// Exact (zero-padded) product of two band-limited fields, restricted to the
// original grid. Oracle-grade product for the frequency-analysis checks.
ScalarField exact_product(const ScalarField& a, const ScalarField& b);

struct ShellSpectrum {
  double s0_norm = 0.0;
  std::vector<double> shell_norms;  // q = 0 .. q_top
};

// Dyadic frequency frame on a grid: smooth radial low-pass chi (1 on
// |xi| <= 1/2, 0 beyond 1) and ring phi(xi) = chi(xi/2) - chi(xi).
// Shells q = 0..q_top cover every mode inside the dealias mask; shells up
// to q_max additionally have their support inside the mask.
class DyadicFrame {
 public:
  explicit DyadicFrame(SpectralGrid::Ptr g);

  const SpectralGrid::Ptr& grid() const { return g_; }
  int q_max() const { return q_max_; }
  int q_top() const { return q_top_; }

  static double chi(double r);
  static double phi_profile(double r) { return chi(r / 2.0) - chi(r); }

  // Delta_q f (q in [0, q_top]).
  ScalarField shell_project(const ScalarField& f, int q) const;
  // S_q f = chi(2^{-q} xi) multiplier (q >= -1 allowed; S_0 is the frame base).
  ScalarField low_pass(const ScalarField& f, int q) const;

  ShellSpectrum shell_spectrum(const ScalarField& f) const;

  // (||S_0 f||^2 + sum_q 2^{2qs} ||Delta_q f||^2)^{1/2} over shells 0..q_top.
  double sobolev_norm(const ScalarField& f, double s) const;

  struct Bony {
    ScalarField low_high;   // T_a b
    ScalarField high_low;   // T_b a
    ScalarField resonant;   // R(a, b)
  };
  Bony bony_decompose(const ScalarField& a, const ScalarField& b) const;

  struct CommutatorReport {
    ScalarField field;      // [Delta_q, u] v
    double norm_lp = 0.0;
    double bound_no_c = 0.0;  // 2^{-q} ||grad u||_{L^r} ||v||_{L^s}
    double ratio = 0.0;
  };
  // Exponents must satisfy 1/p = 1/r + 1/s (inf allowed for r).
  CommutatorReport commutator(int q, const ScalarField& u, const ScalarField& v,
                              double p, double r, double s) const;

  struct InterpolationReport {
    double lhs = 0.0;       // ||g||_{L^{2p}}
    double rhs_no_c = 0.0;  // sqrt(p) ||g||^{1/p} ||grad g||^{1-1/p}
    double ratio = 0.0;
  };
  InterpolationReport interpolation_check(const ScalarField& g, int p) const;

  struct BernsteinReport {
    bool vacuous = false;
    double grad_ratio = 0.0;     // ||grad D_q f|| / (2^q ||D_q f||), L2
    double lp_ratio_2_4 = 0.0;   // ||D_q f||_{L4} / (2^{d(1/2-1/4)q} ||D_q f||_{L2})
    double lp_ratio_2_inf = 0.0;
    double lowpass_ratio = 0.0;  // 2^{-q} ||grad S_q f||_{L2} / ||f||_{L2}
  };
  BernsteinReport bernstein_check(const ScalarField& f, int q) const;

  struct LogEmbeddingReport {
    double lhs = 0.0;  // ||Q||_{L^inf}
    double rhs = 0.0;  // ||Q||_{H1} sqrt(ln(e + ||grad Q||^2_{Hs} / ||Q||_{H1}))
    double ratio = 0.0;
  };
  LogEmbeddingReport log_embedding_monitor(const QTensorField& q, double s) const;

  struct PhiSplit {
    double phi = 0.0;
    double phi1 = 0.0;  // low-frequency part
    double phi2 = 0.0;
  };
  PhiSplit phi_split(const SimState& state, double s) const;

  // H^s norms of composite fields (shell-based, tensor Frobenius weights).
  double sobolev_norm(const VectorField& u, double s) const;
  double grad_sobolev_norm(const QTensorField& q, double s) const;

 private:
  SpectralGrid::Ptr g_;
  int q_max_;
  int q_top_;
};

}  // namespace beqt
