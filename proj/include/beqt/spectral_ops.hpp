#pragma once

#include "beqt/field.hpp"

namespace beqt {

// Mode-wise projection onto divergence-free fields; k=0 mode unchanged.
VectorField leray_project(const VectorField& u);

// Friedrichs mollifier: sharp Fourier annulus cutoff. Keeps modes with
// 1 <= |k| <= n (Euclidean); removes the mean. Idempotent.
ScalarField mollify_Jn(const ScalarField& f, int n);
void mollify_Jn_inplace(ScalarField& f, int n);
QTensorField mollify_Jn(const QTensorField& q, int n);
VectorField mollify_Jn(const VectorField& u, int n);

// L2 norm of the content outside the J_n annulus (band-limitation check).
double energy_outside_annulus(const ScalarField& f, int n);

}  // namespace beqt
