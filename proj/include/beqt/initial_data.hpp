#pragma once

#include <cstdint>

#include "beqt/evolution.hpp"
#include "beqt/field.hpp"

namespace beqt {

// Band-limited random mean-zero scalar; coefficients depend on the seed and
// mode only, so the same spec reproduces the same field on any grid that
// resolves it.
ScalarField random_band_scalar(SpectralGrid::Ptr g, std::uint64_t seed, int kmax);

// Divergence-free random velocity (from a random streamfunction), scaled to
// the target L2 norm.
VectorField random_band_divfree(SpectralGrid::Ptr g, std::uint64_t seed, int kmax,
                                double target_l2);

// Random smooth Q with prescribed H1 norm.
QTensorField random_band_qtensor(SpectralGrid::Ptr g, std::uint64_t seed, int kmax,
                                 double target_h1);

// Uniaxial director field with integer winding: Q = s (n (x) n - Id/2),
// director angle theta = (w1 x + w2 y) / 2.
QTensorField uniaxial_winding(SpectralGrid::Ptr g, double s, int w1, int w2);

// Taylor-Green velocity (sin x cos y, -cos x sin y) times amplitude.
VectorField taylor_green(SpectralGrid::Ptr g, double amplitude);

struct InitialDataSpec {
  std::uint64_t seed = 1;
  int kmax = 8;
  double u_l2 = 1.0;
  double q_h1 = 1.0;
};

SimState make_random_band_state(SpectralGrid::Ptr g, const ModelParams& p,
                                const InitialDataSpec& spec);

}  // namespace beqt
