// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "relspin/vec3.hpp"

namespace relspin::qpacket {

// Uniform cell-centered momentum-space grid, n nodes per axis. Node
// coordinates are lo + (i + 1/2) h, so P = 0 is never a node on an even
// symmetric grid; construction rejects any grid whose node set would
// contain the exact origin.
struct MomentumGrid {
  int n = 0;
  Vec3 lo;
  Vec3 hi;
  Vec3 h;  // (hi - lo)/n per axis

  double coord(int axis, int i) const { return lo[axis] + (i + 0.5) * h[axis]; }

  Vec3 node(int ix, int iy, int iz) const {
    return {coord(0, ix), coord(1, iy), coord(2, iz)};
  }

  std::size_t size() const {
    const auto nn = static_cast<std::size_t>(n);
    return nn * nn * nn;
  }

  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * n + iy) * n + iz;
  }

  double cell_volume() const { return h.x * h.y * h.z; }
  double max_spacing() const { return std::max(h.x, std::max(h.y, h.z)); }

  bool symmetric_about_origin(double tol = 1e-12) const;
};

MomentumGrid make_grid(int n, const Vec3& lo, const Vec3& hi);

}  // namespace relspin::qpacket
