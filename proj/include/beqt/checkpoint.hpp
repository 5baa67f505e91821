#pragma once

#include <stdexcept>
#include <string>

#include "beqt/evolution.hpp"

namespace beqt {

class CheckpointError : public std::runtime_error {
 public:
  explicit CheckpointError(const std::string& msg)
      : std::runtime_error("checkpoint: " + msg) {}
};

// Binary state snapshot. Layout (all little-endian):
//   magic "BEQT" | version u32 | N u32 | dim u32 | t f64 |
//   8 x f64 params (a, b, c, L, Gamma, nu, xi, galerkin_n; -1 = unset) |
//   field blocks (Q components then u components), each block:
//   ncomp u32 | N u32 | complex coefficients as f64 pairs, row-major.
void checkpoint_write(const SimState& state, const std::string& path);
SimState checkpoint_read(const std::string& path);

}  // namespace beqt
