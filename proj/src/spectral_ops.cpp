#include "beqt/spectral_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "beqt/parallel.hpp"

namespace beqt {

VectorField leray_project(const VectorField& u) {
  const auto& g = *u.grid();
  VectorField out(u.grid());
  par::for_n(g.size(), [&](std::size_t m) {
    const double k1 = g.k1(m), k2 = g.k2(m);
    const double ks = k1 * k1 + k2 * k2;
    if (ks == 0.0) {
      out.x.hat()[m] = u.x.hat()[m];
      out.y.hat()[m] = u.y.hat()[m];
      return;
    }
    const std::complex<double> kdotu = k1 * u.x.hat()[m] + k2 * u.y.hat()[m];
    out.x.hat()[m] = u.x.hat()[m] - k1 * kdotu / ks;
    out.y.hat()[m] = u.y.hat()[m] - k2 * kdotu / ks;
  });
  return out;
}

void mollify_Jn_inplace(ScalarField& f, int n) {
  if (n < 1) throw std::invalid_argument("mollify_Jn: n must be >= 1");
  const auto& g = *f.grid();
  const double n2 = static_cast<double>(n) * n;
  par::for_n(g.size(), [&](std::size_t m) {
    const double ks = g.ksq(m);
    if (ks < 1.0 || ks > n2) f.hat()[m] = {};
  });
}

ScalarField mollify_Jn(const ScalarField& f, int n) {
  ScalarField out = f;
  mollify_Jn_inplace(out, n);
  return out;
}

QTensorField mollify_Jn(const QTensorField& q, int n) {
  QTensorField out = q;
  mollify_Jn_inplace(out.q11, n);
  mollify_Jn_inplace(out.q12, n);
  return out;
}

VectorField mollify_Jn(const VectorField& u, int n) {
  VectorField out = u;
  mollify_Jn_inplace(out.x, n);
  mollify_Jn_inplace(out.y, n);
  return out;
}

double energy_outside_annulus(const ScalarField& f, int n) {
  const auto& g = *f.grid();
  const double n2 = static_cast<double>(n) * n;
  const double s = par::sum_n(g.size(), [&](std::size_t m) {
    const double ks = g.ksq(m);
    return (ks < 1.0 || ks > n2) ? std::norm(f.hat()[m]) : 0.0;
  });
  return std::sqrt(g.domain_area() * s);
}

}  // namespace beqt
