// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <vector>

#include "relspin/grid.hpp"
#include "relspin/units.hpp"
#include "relspin/vec3.hpp"

namespace relspin::qpacket {

using Complex = std::complex<double>;
using Spinor = std::array<Complex, 2>;

// Two-component positive-energy spinor amplitude over a momentum grid.
// Packets are treated as immutable values: every operation returns a new
// packet. `origin_vanishing` is set by make_swave_packet, whose |P| profile
// factor keeps the 1/P^2 operator integrands regular even though the raw
// near-origin probability mass is only O(h^5)-small at desk resolution.
struct SpinorWavepacket {
  MomentumGrid grid;
  std::vector<Complex> up;
  std::vector<Complex> down;
  bool origin_vanishing = false;
};

struct PacketDiagnostics {
  double total_norm = 0.0;        // sum (|up|^2 + |down|^2) h^3
  double boundary_fraction = 0.0; // outermost-shell mass / total
  double origin_fraction = 0.0;   // mass within |P| <= 3 max(h) / total
};

PacketDiagnostics diagnose(const SpinorWavepacket& psi);

// Norm within 1e-10 of one and boundary mass <= 1e-10 of total.
void validate_packet(const SpinorWavepacket& psi);

// Guard for the singular 1/P^2 operators: the packet must either carry the
// vanishing-at-origin profile or have measured origin mass <= 1e-10.
void require_origin_safe(const SpinorWavepacket& psi);

// amp(P) = N exp(-|P - center|^2 / (4 sigma_p^2)) chi_hat. Requires
// |center| >= 4 sigma_p and grid bounds holding center +- 6 sigma_p.
SpinorWavepacket make_gaussian_packet(const MomentumGrid& grid, const Vec3& center, double sigma_p,
                                      const Spinor& chi);

// Isotropic amp(P) = N |P| exp(-|P|^2 / (4 w^2)) chi_hat on a grid symmetric
// about the origin. The |P| factor keeps <1/P^2> finite on refinement.
SpinorWavepacket make_swave_packet(const MomentumGrid& grid, double radial_width,
                                   const Spinor& chi);

// Wraps raw amplitudes: normalizes and validates. Origin safety is decided
// by measurement only.
SpinorWavepacket from_amplitudes(const MomentumGrid& grid, std::vector<Complex> up,
                                 std::vector<Complex> down);

// Multiplies by the position phase exp(-i P . x0 / hbar).
SpinorWavepacket with_position_phase(const SpinorWavepacket& psi, const Vec3& x0,
                                     const UnitSystem& u);

// Free evolution amp -> exp(-i E(P) t / hbar) amp; pointwise phase, so the
// norm and every multiplicative expectation are preserved.
SpinorWavepacket evolve_free(const SpinorWavepacket& psi, double t, double mass,
                             const UnitSystem& u);

}  // namespace relspin::qpacket
