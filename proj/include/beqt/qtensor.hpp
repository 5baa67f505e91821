#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace beqt {

// Pointwise traceless symmetric d x d matrix (d = 2 or 3), stored by its
// minimal independent components so trace and symmetry hold by construction.
//   d=2: (q11, q12)
//   d=3: (q11, q12, q13, q22, q23)
class QTensor {
 public:
  explicit QTensor(int dim) : dim_(check_dim(dim)), c_{} {}

  static QTensor zero(int dim) { return QTensor(dim); }

  static QTensor from_components_2d(double q11, double q12) {
    QTensor q(2);
    q.c_[0] = q11;
    q.c_[1] = q12;
    return q;
  }

  static QTensor from_components_3d(double q11, double q12, double q13,
                                    double q22, double q23) {
    QTensor q(3);
    q.c_ = {q11, q12, q13, q22, q23};
    return q;
  }

  int dim() const { return dim_; }
  int ncomp() const { return dim_ == 2 ? 2 : 5; }
  double comp(int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& comp(int i) { return c_[static_cast<std::size_t>(i)]; }

  // Full matrix entry, reconstructed from the minimal components.
  double operator()(int i, int j) const;

  QTensor& operator+=(const QTensor& o);
  QTensor& operator-=(const QTensor& o);
  QTensor& operator*=(double s);

  friend QTensor operator+(QTensor a, const QTensor& b) { return a += b; }
  friend QTensor operator-(QTensor a, const QTensor& b) { return a -= b; }
  friend QTensor operator*(QTensor a, double s) { return a *= s; }
  friend QTensor operator*(double s, QTensor a) { return a *= s; }

  // Frobenius norm sqrt(tr Q^2).
  double norm() const;

 private:
  static int check_dim(int dim) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("QTensor: dim must be 2 or 3");
    return dim;
  }
  int dim_;
  std::array<double, 5> c_;
};

// Coefficient set of the model. c, L, Gamma, nu must be positive.
struct ModelParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double L = 1.0;
  double Gamma = 1.0;
  double nu = 1.0;
  double xi = 0.0;
  int dim = 2;

  void validate() const;
};

// s (n (x) n - Id/d) for a unit director n.
QTensor uniaxial(const double* n, double s, int dim);
QTensor uniaxial2(double nx, double ny, double s);
QTensor uniaxial3(double nx, double ny, double nz, double s);

// tr(AB).
double contract(const QTensor& a, const QTensor& b);

double trace_q2(const QTensor& q);
double trace_q3(const QTensor& q);

// -aQ + b[Q^2 - tr(Q^2)/d Id] - cQ tr(Q^2); the negative gradient of the
// bulk energy density. The Id-subtraction uses 1/d in every dimension.
QTensor bulk_force(const QTensor& q, const ModelParams& p);

// Bulk energy density (a/2) tr Q^2 - (b/3) tr Q^3 + (c/4) tr^2(Q^2).
double bulk_energy_density(const QTensor& q, const ModelParams& p);

struct CubicTraceBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// tr(Q^3) <= (3 delta/8) tr^2(Q^2) + (1/delta) tr(Q^2) for traceless
// symmetric 3x3 Q and any delta > 0.
CubicTraceBound cubic_trace_bound_check(const QTensor& q, double delta);

// Deterministic sampler: components i.i.d. uniform in [-scale, scale].
QTensor random_traceless_symmetric(std::uint64_t seed, int dim, double scale);

}  // namespace beqt
