// SPDX-License-Identifier: Apache-2.0
#include "relspin/wavepacket.hpp"

#include <cmath>

#include "relspin/error.hpp"
#include "relspin/kinematics.hpp"

namespace relspin::qpacket {

namespace {

double node_density(const SpinorWavepacket& psi, std::size_t idx) {
  return std::norm(psi.up[idx]) + std::norm(psi.down[idx]);
}

Spinor normalized_spinor(const Spinor& chi) {
  const double n2 = std::norm(chi[0]) + std::norm(chi[1]);
  if (!(n2 > 0.0)) fail(ErrorKind::invalid_parameter, "spinor chi must be nonzero");
  const double inv = 1.0 / std::sqrt(n2);
  return {chi[0] * inv, chi[1] * inv};
}

// Scales both components so that sum (|up|^2+|down|^2) h^3 == 1.
void normalize(SpinorWavepacket& psi) {
  double total = 0.0;
  for (std::size_t i = 0; i < psi.up.size(); ++i) total += node_density(psi, i);
  total *= psi.grid.cell_volume();
  if (!(total > 0.0)) fail(ErrorKind::invalid_parameter, "packet has zero norm");
  const double scale = 1.0 / std::sqrt(total);
  for (auto& a : psi.up) a *= scale;
  for (auto& a : psi.down) a *= scale;
}

SpinorWavepacket build_product_packet(const MomentumGrid& grid, const Spinor& chi,
                                      const auto& profile) {
  const Spinor chat = normalized_spinor(chi);
  SpinorWavepacket psi;
  psi.grid = grid;
  psi.up.resize(grid.size());
  psi.down.resize(grid.size());
  for (int ix = 0; ix < grid.n; ++ix) {
    for (int iy = 0; iy < grid.n; ++iy) {
      for (int iz = 0; iz < grid.n; ++iz) {
        const std::size_t idx = grid.index(ix, iy, iz);
        const double f = profile(grid.node(ix, iy, iz));
        psi.up[idx] = f * chat[0];
        psi.down[idx] = f * chat[1];
      }
    }
  }
  normalize(psi);
  return psi;
}

}  // namespace

PacketDiagnostics diagnose(const SpinorWavepacket& psi) {
  const auto& g = psi.grid;
  const double ball2 = 9.0 * g.max_spacing() * g.max_spacing();

  double total = 0.0;
  double boundary = 0.0;
  double origin = 0.0;
  for (int ix = 0; ix < g.n; ++ix) {
    for (int iy = 0; iy < g.n; ++iy) {
      for (int iz = 0; iz < g.n; ++iz) {
        const double rho = node_density(psi, g.index(ix, iy, iz));
        total += rho;
        if (ix == 0 || iy == 0 || iz == 0 || ix == g.n - 1 || iy == g.n - 1 || iz == g.n - 1)
          boundary += rho;
        if (norm2(g.node(ix, iy, iz)) <= ball2) origin += rho;
      }
    }
  }

  PacketDiagnostics d;
  d.total_norm = total * g.cell_volume();
  if (total > 0.0) {
    d.boundary_fraction = boundary / total;
    d.origin_fraction = origin / total;
  }
  return d;
}

void validate_packet(const SpinorWavepacket& psi) {
  if (psi.grid.n < 8 || psi.up.size() != psi.grid.size() || psi.down.size() != psi.grid.size())
    fail(ErrorKind::invalid_parameter, "packet amplitude arrays do not match the grid");
  const PacketDiagnostics d = diagnose(psi);
  if (!(std::abs(d.total_norm - 1.0) <= 1e-10))
    fail(ErrorKind::invalid_parameter, "packet is not normalized to 1 within 1e-10");
  if (!(d.boundary_fraction <= 1e-10))
    fail(ErrorKind::grid_truncation, "packet mass on the outermost grid shell exceeds 1e-10");
}

void require_origin_safe(const SpinorWavepacket& psi) {
  if (psi.origin_vanishing) return;
  const PacketDiagnostics d = diagnose(psi);
  if (!(d.origin_fraction <= 1e-10))
    fail(ErrorKind::singular_operator,
         "packet mass near P = 0 exceeds 1e-10; the 1/P^2 operator is not trustworthy here");
}

SpinorWavepacket make_gaussian_packet(const MomentumGrid& grid, const Vec3& center, double sigma_p,
                                      const Spinor& chi) {
  if (!(sigma_p > 0.0) || !is_finite(center))
    fail(ErrorKind::invalid_parameter, "packet center and width must be finite, width positive");
  if (norm(center) < 4.0 * sigma_p)
    fail(ErrorKind::origin_overlap, "|center| must be at least 4 sigmaP away from P = 0");
  for (int a = 0; a < 3; ++a) {
    if (center[a] - 6.0 * sigma_p < grid.lo[a] || center[a] + 6.0 * sigma_p > grid.hi[a])
      fail(ErrorKind::grid_truncation, "grid bounds must hold center +- 6 sigmaP on every axis");
  }

  const double inv4s2 = 1.0 / (4.0 * sigma_p * sigma_p);
  SpinorWavepacket psi = build_product_packet(
      grid, chi, [&](const Vec3& P) { return std::exp(-norm2(P - center) * inv4s2); });
  validate_packet(psi);
  return psi;
}

SpinorWavepacket make_swave_packet(const MomentumGrid& grid, double radial_width,
                                   const Spinor& chi) {
  if (!(radial_width > 0.0))
    fail(ErrorKind::invalid_parameter, "radial width must be positive");
  if (!grid.symmetric_about_origin())
    fail(ErrorKind::grid_symmetry, "s-wave packet requires a grid symmetric about the origin");

  const double inv4w2 = 1.0 / (4.0 * radial_width * radial_width);
  SpinorWavepacket psi = build_product_packet(grid, chi, [&](const Vec3& P) {
    const double p2 = norm2(P);
    return std::sqrt(p2) * std::exp(-p2 * inv4w2);
  });
  psi.origin_vanishing = true;
  validate_packet(psi);
  return psi;
}

SpinorWavepacket from_amplitudes(const MomentumGrid& grid, std::vector<Complex> up,
                                 std::vector<Complex> down) {
  if (up.size() != grid.size() || down.size() != grid.size())
    fail(ErrorKind::invalid_parameter, "amplitude arrays do not match the grid size");
  SpinorWavepacket psi;
  psi.grid = grid;
  psi.up = std::move(up);
  psi.down = std::move(down);
  normalize(psi);
  validate_packet(psi);
  return psi;
}

SpinorWavepacket with_position_phase(const SpinorWavepacket& psi, const Vec3& x0,
                                     const UnitSystem& u) {
  SpinorWavepacket out = psi;
  const auto& g = psi.grid;
  for (int ix = 0; ix < g.n; ++ix) {
    for (int iy = 0; iy < g.n; ++iy) {
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t idx = g.index(ix, iy, iz);
        const Complex phase = std::polar(1.0, -dot(g.node(ix, iy, iz), x0) / u.hbar);
        out.up[idx] *= phase;
        out.down[idx] *= phase;
      }
    }
  }
  return out;
}

SpinorWavepacket evolve_free(const SpinorWavepacket& psi, double t, double mass,
                             const UnitSystem& u) {
  relkin::require_positive_mass(mass);
  SpinorWavepacket out = psi;
  const auto& g = psi.grid;
  const double m2c2 = mass * mass * u.c * u.c;
  for (int ix = 0; ix < g.n; ++ix) {
    for (int iy = 0; iy < g.n; ++iy) {
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t idx = g.index(ix, iy, iz);
        const double e = u.c * std::sqrt(m2c2 + norm2(g.node(ix, iy, iz)));
        const Complex phase = std::polar(1.0, -e * t / u.hbar);
        out.up[idx] *= phase;
        out.down[idx] *= phase;
      }
    }
  }
  return out;
}

}  // namespace relspin::qpacket
