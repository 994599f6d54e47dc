// SPDX-License-Identifier: Apache-2.0
#include "relspin/lorentz.hpp"

#include <algorithm>
#include <cmath>

#include "relspin/kinematics.hpp"

namespace relspin::relkin {

namespace {

constexpr double kEta[4] = {1.0, -1.0, -1.0, -1.0};

double det3(double a00, double a01, double a02, double a10, double a11, double a12, double a20,
            double a21, double a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
         a02 * (a10 * a21 - a11 * a20);
}

LorentzTransform matmul(const LorentzTransform& a, const LorentzTransform& b) {
  LorentzTransform r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  }
  return r;
}

// Axis-angle of the spatial 3x3 block of a pure rotation. Uses the trace
// formula with the antisymmetric-part axis; within 1e-6 of angle = pi the
// antisymmetric part degenerates and the symmetric-part eigenvector is used.
AxisAngle rotation_to_axis_angle(const LorentzTransform& R) {
  const auto& m = R.m;
  const double trace = m[1][1] + m[2][2] + m[3][3];
  const double c = std::clamp((trace - 1.0) / 2.0, -1.0, 1.0);
  const double angle = std::acos(c);
  const Vec3 anti{m[3][2] - m[2][3], m[1][3] - m[3][1], m[2][1] - m[1][2]};

  if (angle < 1e-12) return {Vec3{0.0, 0.0, 1.0}, angle};

  if (std::abs(angle - M_PI) < 1e-6) {
    // R ~ 2 n n^T - I: read the axis off the dominant column of (R + I)/2.
    int j = 1;
    for (int k = 2; k <= 3; ++k)
      if (m[k][k] > m[j][j]) j = k;
    const double njj = std::sqrt(std::max(0.0, (m[j][j] + 1.0) / 2.0));
    Vec3 axis;
    if (njj > 0.0) {
      axis[j - 1] = njj;
      for (int k = 1; k <= 3; ++k) {
        if (k == j) continue;
        axis[k - 1] = (m[k][j] + m[j][k]) / (4.0 * njj);
      }
    } else {
      axis = Vec3{0.0, 0.0, 1.0};
    }
    axis = axis / norm(axis);
    if (dot(axis, anti) < 0.0) axis = -axis;
    return {axis, angle};
  }

  const Vec3 axis = anti / (2.0 * std::sin(angle));
  return {axis / norm(axis), angle};
}

}  // namespace

LorentzTransform identity_transform() {
  LorentzTransform L;
  for (int i = 0; i < 4; ++i) L.m[i][i] = 1.0;
  return L;
}

LorentzTransform pure_boost(const Vec3& velocity, const UnitSystem& u) {
  const double gamma = lorentz_gamma(velocity, u);  // validates |v| < c
  const Vec3 beta = velocity / u.c;
  // (gamma - 1)/beta^2 in the form gamma^2/(gamma + 1), finite as v -> 0.
  const double k = gamma * gamma / (gamma + 1.0);

  LorentzTransform L;
  L.m[0][0] = gamma;
  for (int i = 0; i < 3; ++i) {
    L.m[0][i + 1] = gamma * beta[i];
    L.m[i + 1][0] = gamma * beta[i];
    for (int j = 0; j < 3; ++j) L.m[i + 1][j + 1] = k * beta[i] * beta[j];
    L.m[i + 1][i + 1] += 1.0;
  }
  return L;
}

LorentzTransform rotation_about(const Vec3& axis, double angle) {
  const double n = norm(axis);
  if (!(n > 0.0) || !is_finite(axis) || !std::isfinite(angle))
    fail(ErrorKind::invalid_parameter, "rotation axis must be a finite nonzero vector");
  const Vec3 a = axis / n;
  const double c = std::cos(angle);
  const double s = std::sin(angle);

  LorentzTransform L = identity_transform();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) L.m[i + 1][j + 1] = (1.0 - c) * a[i] * a[j];
  L.m[1][1] += c;
  L.m[2][2] += c;
  L.m[3][3] += c;
  L.m[1][2] += -s * a.z;
  L.m[1][3] += s * a.y;
  L.m[2][1] += s * a.z;
  L.m[2][3] += -s * a.x;
  L.m[3][1] += -s * a.y;
  L.m[3][2] += s * a.x;
  return L;
}

LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b) {
  LorentzTransform r = matmul(a, b);
  validate_lorentz(r, 1e-10, ErrorKind::numeric_degradation);
  return r;
}

LorentzTransform lorentz_inverse(const LorentzTransform& L) {
  LorentzTransform r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = kEta[i] * L.m[j][i] * kEta[j];
  return r;
}

FourVector apply(const LorentzTransform& L, const FourVector& x) {
  const double in[4] = {x.t, x.r.x, x.r.y, x.r.z};
  double out[4];
  for (int i = 0; i < 4; ++i) {
    out[i] = 0.0;
    for (int j = 0; j < 4; ++j) out[i] += L.m[i][j] * in[j];
  }
  return {out[0], {out[1], out[2], out[3]}};
}

double metric_residual(const LorentzTransform& L) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += L.m[k][i] * kEta[k] * L.m[k][j];
      const double target = (i == j) ? kEta[i] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  }
  return worst;
}

double determinant(const LorentzTransform& L) {
  const auto& m = L.m;
  double det = 0.0;
  for (int j = 0; j < 4; ++j) {
    double minor[3][3];
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    const double cof = det3(minor[0][0], minor[0][1], minor[0][2], minor[1][0], minor[1][1],
                            minor[1][2], minor[2][0], minor[2][1], minor[2][2]);
    det += ((j % 2 == 0) ? 1.0 : -1.0) * m[0][j] * cof;
  }
  return det;
}

void validate_lorentz(const LorentzTransform& L, double tol, ErrorKind kind) {
  const double res = metric_residual(L);
  if (!(res <= tol)) fail(kind, "metric preservation violated, residual " + std::to_string(res));
  const double det = determinant(L);
  if (!(std::abs(det - 1.0) <= tol)) fail(kind, "determinant is not +1");
  if (!(L.m[0][0] >= 1.0 - tol)) fail(kind, "transform is not orthochronous");
}

BoostRotation decompose_boost_rotation(const LorentzTransform& L, const UnitSystem& u) {
  if (!(L.m[0][0] >= 1.0 - 1e-10))
    fail(ErrorKind::decomposition_failure, "transform is not orthochronous");

  const Vec3 v = Vec3{L.m[1][0], L.m[2][0], L.m[3][0]} * (u.c / L.m[0][0]);
  const LorentzTransform R = matmul(lorentz_inverse(pure_boost(v, u)), L);

  double time_residual = std::abs(R.m[0][0] - 1.0);
  for (int i = 1; i < 4; ++i) {
    time_residual = std::max(time_residual, std::abs(R.m[0][i]));
    time_residual = std::max(time_residual, std::abs(R.m[i][0]));
  }
  if (!(time_residual <= 1e-8))
    fail(ErrorKind::decomposition_failure,
         "residual time block after factoring out the boost: " + std::to_string(time_residual));

  return {v, rotation_to_axis_angle(R)};
}

AxisAngle wigner_rotation(const Vec3& v1, const Vec3& v2, const UnitSystem& u) {
  const LorentzTransform L = compose(pure_boost(v2, u), pure_boost(v1, u));
  return decompose_boost_rotation(L, u).rotation;
}

Vec3 thomas_rate(const Vec3& velocity, const Vec3& acceleration, const UnitSystem& u) {
  if (!is_finite(acceleration)) fail(ErrorKind::invalid_parameter, "acceleration must be finite");
  const double gamma = lorentz_gamma(velocity, u);  // validates |v| < c
  return (gamma * gamma / (gamma + 1.0) / (u.c * u.c)) * cross(acceleration, velocity);
}

}  // namespace relspin::relkin
