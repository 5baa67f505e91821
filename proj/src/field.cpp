#include "beqt/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "beqt/parallel.hpp"

namespace beqt {

namespace {
void require_same_grid(const SpectralGrid::Ptr& a, const SpectralGrid::Ptr& b) {
  if (a != b) throw std::invalid_argument("field operation: grid mismatch");
}
}  // namespace

std::vector<double> ScalarField::to_physical() const {
  std::vector<double> phys(g_->size());
  g_->to_physical(hat_.data(), phys.data());
  return phys;
}

ScalarField ScalarField::from_physical(SpectralGrid::Ptr g, const std::vector<double>& phys) {
  if (phys.size() != g->size())
    throw std::invalid_argument("ScalarField::from_physical: size mismatch");
  ScalarField f(std::move(g));
  f.g_->from_physical(phys.data(), f.hat_.data());
  return f;
}

void ScalarField::set_zero() { std::fill(hat_.begin(), hat_.end(), std::complex<double>{}); }

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(g_, o.g_);
  par::for_n(hat_.size(), [&](std::size_t m) { hat_[m] += o.hat_[m]; });
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(g_, o.g_);
  par::for_n(hat_.size(), [&](std::size_t m) { hat_[m] -= o.hat_[m]; });
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  par::for_n(hat_.size(), [&](std::size_t m) { hat_[m] *= s; });
  return *this;
}

ScalarField derivative(const ScalarField& f, int dx, int dy) {
  const auto& g = *f.grid();
  ScalarField out(f.grid());
  par::for_n(g.size(), [&](std::size_t m) {
    std::complex<double> factor{1.0, 0.0};
    const std::complex<double> ik1{0.0, static_cast<double>(g.k1(m))};
    const std::complex<double> ik2{0.0, static_cast<double>(g.k2(m))};
    for (int i = 0; i < dx; ++i) factor *= ik1;
    for (int i = 0; i < dy; ++i) factor *= ik2;
    out.hat()[m] = factor * f.hat()[m];
  });
  return out;
}

ScalarField laplacian(const ScalarField& f) {
  const auto& g = *f.grid();
  ScalarField out(f.grid());
  par::for_n(g.size(), [&](std::size_t m) { out.hat()[m] = -g.ksq(m) * f.hat()[m]; });
  return out;
}

void dealias_inplace(ScalarField& f) {
  const auto& g = *f.grid();
  par::for_n(g.size(), [&](std::size_t m) {
    if (!g.in_mask(m)) f.hat()[m] = {};
  });
}

ScalarField dealias(const ScalarField& f) {
  ScalarField out = f;
  dealias_inplace(out);
  return out;
}

ScalarField multiply_raw(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid());
  const auto pa = a.to_physical();
  const auto pb = b.to_physical();
  std::vector<double> prod(pa.size());
  par::for_n(prod.size(), [&](std::size_t m) { prod[m] = pa[m] * pb[m]; });
  return ScalarField::from_physical(a.grid(), prod);
}

namespace {
int g_product_mollifier = 0;
}

void set_product_mollifier(int n) { g_product_mollifier = n; }
int product_mollifier() { return g_product_mollifier; }

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
  ScalarField out = multiply_raw(a, b);
  dealias_inplace(out);
  if (g_product_mollifier > 0) {
    const auto& g = *out.grid();
    const double n2 =
        static_cast<double>(g_product_mollifier) * g_product_mollifier;
    par::for_n(g.size(), [&](std::size_t m) {
      const double ks = g.ksq(m);
      if (ks < 1.0 || ks > n2) out.hat()[m] = {};
    });
  }
  return out;
}

double inner(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid());
  const double area = a.grid()->domain_area();
  return area * par::sum_n(a.hat().size(), [&](std::size_t m) {
    return a.hat()[m].real() * b.hat()[m].real() + a.hat()[m].imag() * b.hat()[m].imag();
  });
}

double l2_norm(const ScalarField& f) { return std::sqrt(std::max(0.0, inner(f, f))); }

double linf_norm(const ScalarField& f) {
  const auto phys = f.to_physical();
  double m = 0.0;
  for (double v : phys) m = std::max(m, std::abs(v));
  return m;
}

double lp_norm(const ScalarField& f, double p) {
  if (std::isinf(p)) return linf_norm(f);
  const auto phys = f.to_physical();
  const double cell = f.grid()->cell_area();
  const double s = par::sum_n(phys.size(), [&](std::size_t m) {
    return std::pow(std::abs(phys[m]), p);
  });
  return std::pow(cell * s, 1.0 / p);
}

double max_abs_coeff(const ScalarField& f) {
  double m = 0.0;
  for (const auto& c : f.hat()) m = std::max(m, std::abs(c));
  return m;
}

bool all_finite(const ScalarField& f) {
  for (const auto& c : f.hat())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

double l2_norm(const VectorField& u) {
  const double a = l2_norm(u.x), b = l2_norm(u.y);
  return std::sqrt(a * a + b * b);
}

double l2_norm(const QTensorField& q) {
  // |Q|^2 = 2 (q11^2 + q12^2) pointwise.
  const double a = l2_norm(q.q11), b = l2_norm(q.q12);
  return std::sqrt(2.0 * (a * a + b * b));
}

double linf_norm(const QTensorField& q) {
  const auto p11 = q.q11.to_physical();
  const auto p12 = q.q12.to_physical();
  double m = 0.0;
  for (std::size_t i = 0; i < p11.size(); ++i)
    m = std::max(m, std::sqrt(2.0 * (p11[i] * p11[i] + p12[i] * p12[i])));
  return m;
}

double grad_l2_norm(const ScalarField& f) {
  const auto& g = *f.grid();
  const double s = par::sum_n(f.hat().size(), [&](std::size_t m) {
    return g.ksq(m) * std::norm(f.hat()[m]);
  });
  return std::sqrt(g.domain_area() * s);
}

double grad_l2_norm(const VectorField& u) {
  const double a = grad_l2_norm(u.x), b = grad_l2_norm(u.y);
  return std::sqrt(a * a + b * b);
}

double grad_l2_norm(const QTensorField& q) {
  const double a = grad_l2_norm(q.q11), b = grad_l2_norm(q.q12);
  return std::sqrt(2.0 * (a * a + b * b));
}

double h1_norm(const QTensorField& q) {
  const double a = l2_norm(q), b = grad_l2_norm(q);
  return std::sqrt(a * a + b * b);
}

double divergence_linf(const VectorField& u) {
  const auto& g = *u.grid();
  double m = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::complex<double> div =
        std::complex<double>{0.0, static_cast<double>(g.k1(i))} * u.x.hat()[i] +
        std::complex<double>{0.0, static_cast<double>(g.k2(i))} * u.y.hat()[i];
    m = std::max(m, std::abs(div));
  }
  return m;
}

bool all_finite(const VectorField& u) { return all_finite(u.x) && all_finite(u.y); }
bool all_finite(const QTensorField& q) { return all_finite(q.q11) && all_finite(q.q12); }

QTensorField dealias(const QTensorField& q) {
  QTensorField out = q;
  dealias_inplace(out.q11);
  dealias_inplace(out.q12);
  return out;
}

VectorField dealias(const VectorField& u) {
  VectorField out = u;
  dealias_inplace(out.x);
  dealias_inplace(out.y);
  return out;
}

}  // namespace beqt
