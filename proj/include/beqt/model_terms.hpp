#pragma once

#include "beqt/field.hpp"
#include "beqt/qtensor.hpp"

namespace beqt {

// Symmetric and antisymmetric parts of the velocity gradient, with the
// index convention (grad u)_{ab} = u_{a,b} = d_b u_a, so
// Omega_{ab} = (d_b u_a - d_a u_b) / 2.
struct VelocityGradientParts {
  TensorField D;
  TensorField Omega;
};

// Full velocity gradient (grad u)_{ab} = d_b u_a.
TensorField velocity_gradient(const VectorField& u);
VelocityGradientParts strain_rotation(const VectorField& u);

// Adds c to the mean mode.
void add_constant(ScalarField& f, double c);

// Traceless symmetric field as a full 2x2 tensor field.
TensorField as_tensor(const QTensorField& q);
// Symmetric/traceless projection of a full tensor: q11 = (t11 - t22)/2,
// q12 = (t12 + t21)/2.
QTensorField symmetric_traceless_part(const TensorField& t);

// Pointwise matrix product, dealiased per entry.
TensorField matmul(const TensorField& a, const TensorField& b);

// tr(Q grad u) as a scalar field (dealiased product).
ScalarField trace_q_gradu(const QTensorField& q, const TensorField& gradu);

// tr(Q^2) as a scalar field.
ScalarField trace_q2_field(const QTensorField& q);

// tr(AB) for two traceless symmetric fields: 2(a11 b11 + a12 b12).
ScalarField contract_field(const QTensorField& a, const QTensorField& b);

// S(grad u, Q) of the co-rotational/stretching term. The full (unprojected)
// variant is exposed for the structural residual checks.
TensorField compute_S_full(const VectorField& u, const QTensorField& q, const ModelParams& p);
QTensorField compute_S(const VectorField& u, const QTensorField& q, const ModelParams& p);

// Molecular field H = bulk force + L Laplacian Q.
QTensorField bulk_force_field(const QTensorField& q, const ModelParams& p);
QTensorField compute_H(const QTensorField& q, const ModelParams& p);

// Stress tensors.
TensorField stress_tau(const QTensorField& q, const QTensorField& h, const ModelParams& p);
TensorField stress_sigma(const QTensorField& q, const QTensorField& h);

// (div t)_a = d_b t_{ab}, spectral.
VectorField tensor_divergence(const TensorField& t);

}  // namespace beqt
