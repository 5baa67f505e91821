#pragma once

#include <complex>
#include <vector>

#include "beqt/grid.hpp"

namespace beqt {

// Real-valued scalar field on the torus, stored by its complex Fourier
// coefficients (conjugate-symmetric). Physical samples on demand.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(SpectralGrid::Ptr g)
      : g_(std::move(g)), hat_(g_->size()) {}

  const SpectralGrid::Ptr& grid() const { return g_; }
  bool empty() const { return !g_; }

  std::vector<std::complex<double>>& hat() { return hat_; }
  const std::vector<std::complex<double>>& hat() const { return hat_; }

  std::vector<double> to_physical() const;
  static ScalarField from_physical(SpectralGrid::Ptr g, const std::vector<double>& phys);

  void set_zero();

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);
  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(ScalarField a, double s) { return a *= s; }
  friend ScalarField operator*(double s, ScalarField a) { return a *= s; }

 private:
  SpectralGrid::Ptr g_;
  std::vector<std::complex<double>> hat_;
};

// Spectral derivative: multiplies mode k by (i k1)^dx (i k2)^dy.
ScalarField derivative(const ScalarField& f, int dx, int dy);
ScalarField laplacian(const ScalarField& f);

// Zeroes modes outside the grid's dealias mask. Idempotent.
ScalarField dealias(const ScalarField& f);
void dealias_inplace(ScalarField& f);

// Pseudo-spectral pointwise product, dealiased. When the product mollifier
// is set (Galerkin mode), the J_n annulus cutoff is applied as well.
ScalarField multiply(const ScalarField& a, const ScalarField& b);

// Spectral annulus cutoff applied after every product; 0 disables.
void set_product_mollifier(int n);
int product_mollifier();
// Raw pointwise product without the mask (building block; callers dealias).
ScalarField multiply_raw(const ScalarField& a, const ScalarField& b);

// Integrals over the torus: <f, g> = int f g dx, ||f||_{L2} = sqrt(<f, f>>.
double inner(const ScalarField& a, const ScalarField& b);
double l2_norm(const ScalarField& f);
double linf_norm(const ScalarField& f);  // grid maximum of |f|
double lp_norm(const ScalarField& f, double p);
double max_abs_coeff(const ScalarField& f);
bool all_finite(const ScalarField& f);

// Divergence-free velocity field (2 components).
struct VectorField {
  ScalarField x, y;

  VectorField() = default;
  explicit VectorField(SpectralGrid::Ptr g) : x(g), y(g) {}
  VectorField(ScalarField a, ScalarField b) : x(std::move(a)), y(std::move(b)) {}
  const SpectralGrid::Ptr& grid() const { return x.grid(); }

  VectorField& operator+=(const VectorField& o) { x += o.x; y += o.y; return *this; }
  VectorField& operator-=(const VectorField& o) { x -= o.x; y -= o.y; return *this; }
  VectorField& operator*=(double s) { x *= s; y *= s; return *this; }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, double s) { return a *= s; }
};

// Gridded traceless symmetric 2x2 tensor: components q11, q12.
struct QTensorField {
  ScalarField q11, q12;

  QTensorField() = default;
  explicit QTensorField(SpectralGrid::Ptr g) : q11(g), q12(g) {}
  QTensorField(ScalarField a, ScalarField b) : q11(std::move(a)), q12(std::move(b)) {}
  const SpectralGrid::Ptr& grid() const { return q11.grid(); }

  QTensorField& operator+=(const QTensorField& o) { q11 += o.q11; q12 += o.q12; return *this; }
  QTensorField& operator-=(const QTensorField& o) { q11 -= o.q11; q12 -= o.q12; return *this; }
  QTensorField& operator*=(double s) { q11 *= s; q12 *= s; return *this; }
  friend QTensorField operator+(QTensorField a, const QTensorField& b) { return a += b; }
  friend QTensorField operator-(QTensorField a, const QTensorField& b) { return a -= b; }
  friend QTensorField operator*(QTensorField a, double s) { return a *= s; }
  friend QTensorField operator*(double s, QTensorField a) { return a *= s; }
};

// General 2x2 tensor field (stresses; not traceless).
struct TensorField {
  ScalarField xx, xy, yx, yy;

  TensorField() = default;
  explicit TensorField(SpectralGrid::Ptr g) : xx(g), xy(g), yx(g), yy(g) {}
  const SpectralGrid::Ptr& grid() const { return xx.grid(); }
};

double l2_norm(const VectorField& u);
double l2_norm(const QTensorField& q);       // pointwise Frobenius norm in L2
double linf_norm(const QTensorField& q);     // grid max of |Q(x)|
double grad_l2_norm(const ScalarField& f);
double grad_l2_norm(const VectorField& u);
double grad_l2_norm(const QTensorField& q);  // ||nabla Q||_{L2} with tensor Frobenius density
double h1_norm(const QTensorField& q);
double divergence_linf(const VectorField& u);  // max_k |k . u_hat(k)|
bool all_finite(const VectorField& u);
bool all_finite(const QTensorField& q);

QTensorField dealias(const QTensorField& q);
VectorField dealias(const VectorField& u);

}  // namespace beqt
