// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "relspin/error.hpp"

namespace relspin {

// Physical constants stay explicit so every formula keeps its factors of c
// and hbar visible. Natural units (c = hbar = 1) are the default.
struct UnitSystem {
  double c = 1.0;
  double hbar = 1.0;
};

inline UnitSystem make_units(double c, double hbar) {
  if (!(c > 0.0)) fail(ErrorKind::invalid_parameter, "speed of light must be positive");
  if (!(hbar > 0.0)) fail(ErrorKind::invalid_parameter, "hbar must be positive");
  return {c, hbar};
}

}  // namespace relspin
