// SPDX-License-Identifier: Apache-2.0
#include "relspin/kinematics.hpp"

#include <cmath>

#include "relspin/error.hpp"

namespace relspin::relkin {

void require_positive_mass(double mass) {
  if (!(mass > 0.0)) fail(ErrorKind::invalid_parameter, "mass must be positive");
}

void require_subluminal(const Vec3& velocity, const UnitSystem& u) {
  if (!is_finite(velocity)) fail(ErrorKind::invalid_parameter, "velocity must be finite");
  if (!(norm(velocity) < u.c * (1.0 - kSpeedMargin)))
    fail(ErrorKind::superluminal_velocity, "|v| must be strictly below c");
}

double lorentz_gamma(const Vec3& velocity, const UnitSystem& u) {
  require_subluminal(velocity, u);
  const double beta2 = norm2(velocity) / (u.c * u.c);
  return 1.0 / std::sqrt(1.0 - beta2);
}

double energy(const Vec3& momentum, double mass, const UnitSystem& u) {
  require_positive_mass(mass);
  if (!is_finite(momentum)) fail(ErrorKind::invalid_parameter, "momentum must be finite");
  return u.c * std::sqrt(mass * mass * u.c * u.c + norm2(momentum));
}

Vec3 velocity_from_momentum(const Vec3& momentum, double mass, const UnitSystem& u) {
  return momentum * (u.c * u.c / energy(momentum, mass, u));
}

Vec3 momentum_from_velocity(const Vec3& velocity, double mass, const UnitSystem& u) {
  require_positive_mass(mass);
  return (mass * lorentz_gamma(velocity, u)) * velocity;
}

}  // namespace relspin::relkin
