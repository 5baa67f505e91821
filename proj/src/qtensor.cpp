#include "beqt/qtensor.hpp"

#include <cmath>
#include <random>

namespace beqt {

double QTensor::operator()(int i, int j) const {
  if (dim_ == 2) {
    // [ q11  q12 ]
    // [ q12 -q11 ]
    if (i == 0 && j == 0) return c_[0];
    if (i == 1 && j == 1) return -c_[0];
    return c_[1];
  }
  // [ q11 q12 q13 ]
  // [ q12 q22 q23 ]
  // [ q13 q23 -(q11+q22) ]
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 0) return c_[0];
  if (i == 0 && j == 1) return c_[1];
  if (i == 0 && j == 2) return c_[2];
  if (i == 1 && j == 1) return c_[3];
  if (i == 1 && j == 2) return c_[4];
  return -(c_[0] + c_[3]);
}

QTensor& QTensor::operator+=(const QTensor& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("QTensor: dimension mismatch");
  for (int i = 0; i < ncomp(); ++i) c_[i] += o.c_[i];
  return *this;
}

QTensor& QTensor::operator-=(const QTensor& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("QTensor: dimension mismatch");
  for (int i = 0; i < ncomp(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QTensor& QTensor::operator*=(double s) {
  for (int i = 0; i < ncomp(); ++i) c_[i] *= s;
  return *this;
}

double QTensor::norm() const { return std::sqrt(trace_q2(*this)); }

void ModelParams::validate() const {
  if (dim != 2 && dim != 3) throw std::invalid_argument("ModelParams: dim must be 2 or 3");
  if (!(c > 0.0)) throw std::invalid_argument("ModelParams: c must be > 0");
  if (!(L > 0.0)) throw std::invalid_argument("ModelParams: L must be > 0");
  if (!(Gamma > 0.0)) throw std::invalid_argument("ModelParams: Gamma must be > 0");
  if (!(nu > 0.0)) throw std::invalid_argument("ModelParams: nu must be > 0");
}

QTensor uniaxial(const double* n, double s, int dim) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("uniaxial: dim must be 2 or 3");
  double norm2 = 0.0;
  for (int i = 0; i < dim; ++i) norm2 += n[i] * n[i];
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
    throw std::invalid_argument("uniaxial: director must be a unit vector");
  if (dim == 2) {
    return QTensor::from_components_2d(s * (n[0] * n[0] - 0.5), s * n[0] * n[1]);
  }
  const double third = 1.0 / 3.0;
  return QTensor::from_components_3d(
      s * (n[0] * n[0] - third), s * n[0] * n[1], s * n[0] * n[2],
      s * (n[1] * n[1] - third), s * n[1] * n[2]);
}

QTensor uniaxial2(double nx, double ny, double s) {
  const double n[2] = {nx, ny};
  return uniaxial(n, s, 2);
}

QTensor uniaxial3(double nx, double ny, double nz, double s) {
  const double n[3] = {nx, ny, nz};
  return uniaxial(n, s, 3);
}

double contract(const QTensor& a, const QTensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("contract: dimension mismatch");
  const int d = a.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s += a(i, j) * b(j, i);
  return s;
}

double trace_q2(const QTensor& q) {
  if (q.dim() == 2) {
    return 2.0 * (q.comp(0) * q.comp(0) + q.comp(1) * q.comp(1));
  }
  return contract(q, q);
}

double trace_q3(const QTensor& q) {
  const int d = q.dim();
  if (d == 2) return 0.0;  // exact for traceless symmetric 2x2
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) s += q(i, j) * q(j, k) * q(k, i);
  return s;
}

QTensor bulk_force(const QTensor& q, const ModelParams& p) {
  if (q.dim() != p.dim) throw std::invalid_argument("bulk_force: dimension mismatch");
  const int d = q.dim();
  const double tr2 = trace_q2(q);
  QTensor out(d);
  if (d == 2) {
    // Q^2 = (tr Q^2 / 2) Id for traceless symmetric 2x2, so the b-term
    // vanishes identically.
    out.comp(0) = -p.a * q.comp(0) - p.c * q.comp(0) * tr2;
    out.comp(1) = -p.a * q.comp(1) - p.c * q.comp(1) * tr2;
    return out;
  }
  // d = 3: assemble from the full matrix, then take minimal components.
  auto q2 = [&](int i, int j) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) s += q(i, k) * q(k, j);
    return s;
  };
  auto entry = [&](int i, int j) {
    const double id = (i == j) ? 1.0 : 0.0;
    return -p.a * q(i, j) + p.b * (q2(i, j) - tr2 / 3.0 * id) - p.c * q(i, j) * tr2;
  };
  out.comp(0) = entry(0, 0);
  out.comp(1) = entry(0, 1);
  out.comp(2) = entry(0, 2);
  out.comp(3) = entry(1, 1);
  out.comp(4) = entry(1, 2);
  return out;
}

double bulk_energy_density(const QTensor& q, const ModelParams& p) {
  const double tr2 = trace_q2(q);
  const double tr3 = q.dim() == 2 ? 0.0 : trace_q3(q);
  return 0.5 * p.a * tr2 - p.b / 3.0 * tr3 + 0.25 * p.c * tr2 * tr2;
}

CubicTraceBound cubic_trace_bound_check(const QTensor& q, double delta) {
  if (q.dim() != 3) throw std::invalid_argument("cubic_trace_bound_check: dim must be 3");
  if (!(delta > 0.0)) throw std::invalid_argument("cubic_trace_bound_check: delta must be > 0");
  CubicTraceBound r;
  const double tr2 = trace_q2(q);
  r.lhs = trace_q3(q);
  r.rhs = 3.0 * delta / 8.0 * tr2 * tr2 + tr2 / delta;
  r.holds = r.lhs <= r.rhs + 1e-12 * (1.0 + std::abs(r.rhs));
  return r;
}

QTensor random_traceless_symmetric(std::uint64_t seed, int dim, double scale) {
  if (!(scale >= 0.0)) throw std::invalid_argument("random_traceless_symmetric: scale must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  QTensor q(dim);
  for (int i = 0; i < q.ncomp(); ++i) q.comp(i) = scale == 0.0 ? 0.0 : dist(rng);
  return q;
}

}  // namespace beqt
