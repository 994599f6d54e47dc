// SPDX-License-Identifier: Apache-2.0
#include "relspin/grid.hpp"

#include <cmath>

#include "relspin/error.hpp"

namespace relspin::qpacket {

namespace {

// True when some node coordinate along this axis lands exactly on zero.
bool axis_hits_zero(double lo, double hi, double h, int n) {
  if (lo > 0.0 || hi < 0.0) return false;
  const auto i = static_cast<long long>(std::llround(-lo / h - 0.5));
  if (i < 0 || i >= n) return false;
  return std::abs(lo + (i + 0.5) * h) <= 1e-9 * h;
}

}  // namespace

bool MomentumGrid::symmetric_about_origin(double tol) const {
  for (int a = 0; a < 3; ++a) {
    if (std::abs(lo[a] + hi[a]) > tol * (hi[a] - lo[a])) return false;
  }
  return true;
}

MomentumGrid make_grid(int n, const Vec3& lo, const Vec3& hi) {
  if (n < 8) fail(ErrorKind::invalid_parameter, "grid needs at least 8 nodes per axis");
  if (!is_finite(lo) || !is_finite(hi))
    fail(ErrorKind::invalid_parameter, "grid bounds must be finite");
  for (int a = 0; a < 3; ++a) {
    if (!(hi[a] > lo[a]))
      fail(ErrorKind::invalid_parameter, "grid bounds must satisfy hi > lo on every axis");
  }

  MomentumGrid g;
  g.n = n;
  g.lo = lo;
  g.hi = hi;
  g.h = (hi - lo) / static_cast<double>(n);

  if (axis_hits_zero(lo.x, hi.x, g.h.x, n) && axis_hits_zero(lo.y, hi.y, g.h.y, n) &&
      axis_hits_zero(lo.z, hi.z, g.h.z, n))
    fail(ErrorKind::invalid_parameter,
         "grid node coincides with P = 0; shift the bounds or use an even node count");
  return g;
}

}  // namespace relspin::qpacket
