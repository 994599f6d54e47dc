// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "relspin/units.hpp"
#include "relspin/vec3.hpp"

namespace relspin::relkin {

// Velocities are accepted only strictly below c: |v|/c < 1 - kSpeedMargin.
// The margin keeps gamma finite instead of overflowing near the light cone.
inline constexpr double kSpeedMargin = 1e-12;

void require_positive_mass(double mass);
void require_subluminal(const Vec3& velocity, const UnitSystem& u);

double lorentz_gamma(const Vec3& velocity, const UnitSystem& u);

// E(P) = c * sqrt(m^2 c^2 + |P|^2); reduces to sqrt(m^2 + P^2) for c = 1.
double energy(const Vec3& momentum, double mass, const UnitSystem& u);

// v = P c^2 / E(P); always strictly subluminal for finite P.
Vec3 velocity_from_momentum(const Vec3& momentum, double mass, const UnitSystem& u);

// P = gamma(v) m v; inverse of velocity_from_momentum.
Vec3 momentum_from_velocity(const Vec3& velocity, double mass, const UnitSystem& u);

}  // namespace relspin::relkin
