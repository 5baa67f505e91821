#include "beqt/model_terms.hpp"

#include <stdexcept>

namespace beqt {

TensorField velocity_gradient(const VectorField& u) {
  TensorField g(u.grid());
  g.xx = derivative(u.x, 1, 0);  // d_1 u_1
  g.xy = derivative(u.x, 0, 1);  // d_2 u_1
  g.yx = derivative(u.y, 1, 0);  // d_1 u_2
  g.yy = derivative(u.y, 0, 1);  // d_2 u_2
  return g;
}

VelocityGradientParts strain_rotation(const VectorField& u) {
  const TensorField g = velocity_gradient(u);
  VelocityGradientParts out;
  out.D = TensorField(u.grid());
  out.Omega = TensorField(u.grid());
  out.D.xx = g.xx;
  out.D.yy = g.yy;
  out.D.xy = 0.5 * (ScalarField(g.xy) + g.yx);
  out.D.yx = out.D.xy;
  out.Omega.xx = ScalarField(u.grid());
  out.Omega.yy = ScalarField(u.grid());
  out.Omega.xy = 0.5 * (ScalarField(g.xy) - g.yx);
  out.Omega.yx = -1.0 * ScalarField(out.Omega.xy);
  return out;
}

void add_constant(ScalarField& f, double c) { f.hat()[0] += c; }

TensorField as_tensor(const QTensorField& q) {
  TensorField t(q.grid());
  t.xx = q.q11;
  t.xy = q.q12;
  t.yx = q.q12;
  t.yy = -1.0 * ScalarField(q.q11);
  return t;
}

QTensorField symmetric_traceless_part(const TensorField& t) {
  QTensorField q(t.grid());
  q.q11 = 0.5 * (ScalarField(t.xx) - t.yy);
  q.q12 = 0.5 * (ScalarField(t.xy) + t.yx);
  return q;
}

TensorField matmul(const TensorField& a, const TensorField& b) {
  TensorField c(a.grid());
  c.xx = multiply(a.xx, b.xx) + multiply(a.xy, b.yx);
  c.xy = multiply(a.xx, b.xy) + multiply(a.xy, b.yy);
  c.yx = multiply(a.yx, b.xx) + multiply(a.yy, b.yx);
  c.yy = multiply(a.yx, b.xy) + multiply(a.yy, b.yy);
  return c;
}

ScalarField trace_q_gradu(const QTensorField& q, const TensorField& gradu) {
  // tr(Q grad u) = sum_{ab} Q_{ab} (grad u)_{ba}
  const TensorField qt = as_tensor(q);
  return multiply(qt.xx, gradu.xx) + multiply(qt.xy, gradu.yx) +
         multiply(qt.yx, gradu.xy) + multiply(qt.yy, gradu.yy);
}

ScalarField trace_q2_field(const QTensorField& q) {
  ScalarField s = multiply(q.q11, q.q11) + multiply(q.q12, q.q12);
  return 2.0 * s;
}

ScalarField contract_field(const QTensorField& a, const QTensorField& b) {
  ScalarField s = multiply(a.q11, b.q11) + multiply(a.q12, b.q12);
  return 2.0 * s;
}

namespace {
TensorField q_plus_id_over_d(const QTensorField& q) {
  TensorField p = as_tensor(q);
  add_constant(p.xx, 0.5);
  add_constant(p.yy, 0.5);
  return p;
}

TensorField lin_comb(const TensorField& a, double ca, const TensorField& b, double cb) {
  TensorField out(a.grid());
  out.xx = ca * ScalarField(a.xx) + cb * ScalarField(b.xx);
  out.xy = ca * ScalarField(a.xy) + cb * ScalarField(b.xy);
  out.yx = ca * ScalarField(a.yx) + cb * ScalarField(b.yx);
  out.yy = ca * ScalarField(a.yy) + cb * ScalarField(b.yy);
  return out;
}

TensorField scale_by_scalar(const TensorField& t, const ScalarField& s) {
  TensorField out(t.grid());
  out.xx = multiply(t.xx, s);
  out.xy = multiply(t.xy, s);
  out.yx = multiply(t.yx, s);
  out.yy = multiply(t.yy, s);
  return out;
}

void accumulate(TensorField& acc, const TensorField& t, double c) {
  acc.xx += c * ScalarField(t.xx);
  acc.xy += c * ScalarField(t.xy);
  acc.yx += c * ScalarField(t.yx);
  acc.yy += c * ScalarField(t.yy);
}
}  // namespace

TensorField compute_S_full(const VectorField& u, const QTensorField& q, const ModelParams& p) {
  if (u.grid() != q.grid()) throw std::invalid_argument("compute_S: grid mismatch");
  const VelocityGradientParts vg = strain_rotation(u);
  const TensorField P = q_plus_id_over_d(q);
  const TensorField A = lin_comb(vg.D, p.xi, vg.Omega, 1.0);   // xi D + Omega
  const TensorField B = lin_comb(vg.D, p.xi, vg.Omega, -1.0);  // xi D - Omega

  TensorField s = matmul(A, P);
  accumulate(s, matmul(P, B), 1.0);
  if (p.xi != 0.0) {
    const ScalarField t = trace_q_gradu(q, velocity_gradient(u));
    accumulate(s, scale_by_scalar(P, t), -2.0 * p.xi);
  }
  return s;
}

QTensorField compute_S(const VectorField& u, const QTensorField& q, const ModelParams& p) {
  return symmetric_traceless_part(compute_S_full(u, q, p));
}

QTensorField bulk_force_field(const QTensorField& q, const ModelParams& p) {
  // d = 2: the b-term vanishes identically, leaving -aQ - cQ tr(Q^2).
  const ScalarField tr2 = trace_q2_field(q);
  QTensorField out(q.grid());
  out.q11 = -p.a * ScalarField(q.q11) - p.c * multiply(q.q11, tr2);
  out.q12 = -p.a * ScalarField(q.q12) - p.c * multiply(q.q12, tr2);
  return out;
}

QTensorField compute_H(const QTensorField& q, const ModelParams& p) {
  QTensorField h = bulk_force_field(q, p);
  h.q11 += p.L * laplacian(q.q11);
  h.q12 += p.L * laplacian(q.q12);
  return h;
}

TensorField stress_tau(const QTensorField& q, const QTensorField& h, const ModelParams& p) {
  if (q.grid() != h.grid()) throw std::invalid_argument("stress_tau: grid mismatch");
  const auto g = q.grid();
  TensorField tau(g);

  if (p.xi != 0.0) {
    const TensorField P = q_plus_id_over_d(q);
    const TensorField ht = as_tensor(h);
    accumulate(tau, matmul(P, ht), -p.xi);
    accumulate(tau, matmul(ht, P), -p.xi);
    const ScalarField qh = contract_field(q, h);
    accumulate(tau, scale_by_scalar(P, qh), 2.0 * p.xi);
  }

  // -L (d_b Q_{cd} d_a Q_{cd} - delta_{ab}/d |grad Q|^2)
  const ScalarField dq11_x = derivative(q.q11, 1, 0);
  const ScalarField dq11_y = derivative(q.q11, 0, 1);
  const ScalarField dq12_x = derivative(q.q12, 1, 0);
  const ScalarField dq12_y = derivative(q.q12, 0, 1);
  // E_{ab} = 2 (d_b q11 d_a q11 + d_b q12 d_a q12)
  ScalarField exx = 2.0 * (multiply(dq11_x, dq11_x) + multiply(dq12_x, dq12_x));
  ScalarField exy = 2.0 * (multiply(dq11_y, dq11_x) + multiply(dq12_y, dq12_x));
  ScalarField eyy = 2.0 * (multiply(dq11_y, dq11_y) + multiply(dq12_y, dq12_y));
  ScalarField half_tr = 0.5 * (ScalarField(exx) + eyy);  // |grad Q|^2 / d
  tau.xx += -p.L * (ScalarField(exx) - half_tr);
  tau.xy += -p.L * ScalarField(exy);
  tau.yx += -p.L * ScalarField(exy);
  tau.yy += -p.L * (ScalarField(eyy) - half_tr);
  return tau;
}

TensorField stress_sigma(const QTensorField& q, const QTensorField& h) {
  if (q.grid() != h.grid()) throw std::invalid_argument("stress_sigma: grid mismatch");
  const TensorField qt = as_tensor(q);
  const TensorField ht = as_tensor(h);
  const TensorField qh = matmul(qt, ht);
  const TensorField hq = matmul(ht, qt);
  TensorField out(q.grid());
  out.xx = ScalarField(qh.xx) - hq.xx;
  out.xy = ScalarField(qh.xy) - hq.xy;
  out.yx = ScalarField(qh.yx) - hq.yx;
  out.yy = ScalarField(qh.yy) - hq.yy;
  return out;
}

VectorField tensor_divergence(const TensorField& t) {
  VectorField out(t.grid());
  out.x = derivative(t.xx, 1, 0) + derivative(t.xy, 0, 1);
  out.y = derivative(t.yx, 1, 0) + derivative(t.yy, 0, 1);
  return out;
}

}  // namespace beqt
