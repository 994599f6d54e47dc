// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "relspin/error.hpp"
#include "relspin/fourvec.hpp"
#include "relspin/units.hpp"
#include "relspin/vec3.hpp"

namespace relspin::relkin {

// Proper orthochronous Lorentz matrix acting on (ct, x, y, z), row-major.
// Invariants: L^T eta L = eta with eta = diag(+1,-1,-1,-1), det L = +1,
// L[0][0] >= 1.
struct LorentzTransform {
  std::array<std::array<double, 4>, 4> m{};
};

// Rotation in axis-angle form; angle in [0, pi], |axis| = 1 whenever the
// angle is meaningfully nonzero.
struct AxisAngle {
  Vec3 axis{0.0, 0.0, 1.0};
  double angle = 0.0;
};

struct BoostRotation {
  Vec3 velocity;
  AxisAngle rotation;
};

LorentzTransform identity_transform();

// Boost convention: maps rest-frame coordinates to a frame in which the
// object moves with velocity +v, so m[0][0] = gamma and m[0][i] = gamma v_i/c.
LorentzTransform pure_boost(const Vec3& velocity, const UnitSystem& u);

// Pure spatial rotation by `angle` (radians, right-handed) about `axis`.
LorentzTransform rotation_about(const Vec3& axis, double angle);

// Matrix product a*b. The result is re-validated, never re-orthogonalized:
// accumulated rounding beyond 1e-10 raises numeric-degradation.
LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b);

// Exact inverse eta L^T eta (valid for any Lorentz matrix).
LorentzTransform lorentz_inverse(const LorentzTransform& L);

FourVector apply(const LorentzTransform& L, const FourVector& x);

// max-abs entry of L^T eta L - eta.
double metric_residual(const LorentzTransform& L);
double determinant(const LorentzTransform& L);

void validate_lorentz(const LorentzTransform& L, double tol, ErrorKind kind);

// Factor L = B(v) R with B a pure boost and R a pure spatial rotation
// (the Wigner rotation of L). v_i = c m[i][0] / m[0][0].
BoostRotation decompose_boost_rotation(const LorentzTransform& L, const UnitSystem& u);

// Rotation part of pure_boost(v2) * pure_boost(v1).
AxisAngle wigner_rotation(const Vec3& v1, const Vec3& v2, const UnitSystem& u);

// Thomas precession angular velocity omega_T = gamma^2/(gamma+1) (a x v)/c^2;
// reduces to (a x v)/(2 c^2) for |v| << c.
Vec3 thomas_rate(const Vec3& velocity, const Vec3& acceleration, const UnitSystem& u);

}  // namespace relspin::relkin
