// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "relspin/vec3.hpp"

namespace relspin {

// Minkowski four-vector with signature (+,-,-,-), index order (t, x, y, z).
struct FourVector {
  double t = 0.0;
  Vec3 r;
};

inline double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.t * b.t - dot(a.r, b.r);
}

inline double minkowski_norm2(const FourVector& a) { return minkowski_dot(a, a); }

inline bool is_finite(const FourVector& a) { return std::isfinite(a.t) && is_finite(a.r); }

}  // namespace relspin
