// SPDX-License-Identifier: Apache-2.0
#include "relspin/spinpart.hpp"

#include <cmath>

#include "relspin/error.hpp"
#include "relspin/kinematics.hpp"

namespace relspin::spinpart {

Vec3 evaluate_force(const ForceSpec& f, const Vec3& position) {
  if (const auto* c = std::get_if<ConstantForce>(&f)) return c->force;
  const auto& coul = std::get<CoulombForce>(f);
  return coul.test_charge * coulomb_field(coul.source_charge, coul.source_position, position);
}

Vec3 moller_shift(const Vec3& spin, const Vec3& velocity, double mass, const UnitSystem& u) {
  relkin::require_positive_mass(mass);
  return cross(spin, velocity) / (mass * u.c * u.c);
}

Vec3 hidden_momentum_accel(const Vec3& spin, const Vec3& acceleration, const UnitSystem& u) {
  return cross(spin, acceleration) / (u.c * u.c);
}

Vec3 hidden_momentum_force(const Vec3& spin, const Vec3& force, double mass, const UnitSystem& u) {
  relkin::require_positive_mass(mass);
  return hidden_momentum_accel(spin, force / mass, u);
}

Vec3 coulomb_field(double charge, const Vec3& source, const Vec3& eval) {
  const Vec3 sep = eval - source;
  const double r2 = norm2(sep);
  if (!(r2 > 0.0)) fail(ErrorKind::singular_field, "field evaluated at the source point");
  return (charge / (r2 * std::sqrt(r2))) * sep;
}

Vec3 hidden_momentum_em(const EMScenario& scenario, const UnitSystem& u) {
  Vec3 E;
  if (const auto* ex = std::get_if<ExplicitField>(&scenario.field)) {
    E = ex->E;
  } else {
    const auto& pc = std::get<PointChargeField>(scenario.field);
    E = coulomb_field(pc.charge, Vec3{}, pc.separation);
  }
  return (scenario.k1 / (u.c * u.c)) * cross(scenario.moment, E);
}

double shift_scale_ratio(const Vec3& velocity, double mass, const UnitSystem& u) {
  relkin::require_positive_mass(mass);
  const double v2 = norm2(velocity);
  if (!(v2 > 0.0)) fail(ErrorKind::singular_limit, "shift-scale ratio diverges at v = 0");
  const double gamma = relkin::lorentz_gamma(velocity, u);  // validates |v| < c
  return 2.0 * u.c * u.c / (gamma * v2);
}

Trajectory integrate(const ClassicalSpinParticle& start, const ForceSpec& force, double dt,
                     int steps, const UnitSystem& u) {
  relkin::require_positive_mass(start.mass);
  if (!(dt > 0.0)) fail(ErrorKind::invalid_parameter, "step dt must be positive");
  if (steps < 2) fail(ErrorKind::invalid_parameter, "need at least 2 steps");
  if (!is_finite(start.position) || !is_finite(start.momentum) || !is_finite(start.spin))
    fail(ErrorKind::invalid_parameter, "initial state must be finite");

  const double m = start.mass;
  const Vec3 S = start.spin;
  const auto vel = [&](const Vec3& P) { return relkin::velocity_from_momentum(P, m, u); };

  Trajectory tr;
  tr.dt = dt;
  tr.rows.reserve(static_cast<std::size_t>(steps) + 1);

  Vec3 q = start.position;
  Vec3 P = start.momentum;

  const auto push_row = [&](int i) {
    const Vec3 v = vel(P);
    if (norm(v) >= u.c * (1.0 - 1e-12))
      fail(ErrorKind::superluminal_abort, "velocity reached c within margin during integration");
    const Vec3 F = evaluate_force(force, q);
    tr.rows.push_back({i * dt, q, P, v, moller_shift(S, v, m, u),
                       hidden_momentum_force(S, F, m, u)});
  };

  push_row(0);
  for (int i = 1; i <= steps; ++i) {
    const Vec3 k1q = vel(P);
    const Vec3 k1p = evaluate_force(force, q);
    const Vec3 k2q = vel(P + (dt / 2.0) * k1p);
    const Vec3 k2p = evaluate_force(force, q + (dt / 2.0) * k1q);
    const Vec3 k3q = vel(P + (dt / 2.0) * k2p);
    const Vec3 k3p = evaluate_force(force, q + (dt / 2.0) * k2q);
    const Vec3 k4q = vel(P + dt * k3p);
    const Vec3 k4p = evaluate_force(force, q + dt * k3q);

    q += (dt / 6.0) * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    P += (dt / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    push_row(i);
  }
  return tr;
}

double verify_hidden_momentum(const Trajectory& trajectory, double mass, const UnitSystem& u) {
  relkin::require_positive_mass(mass);
  const auto& rows = trajectory.rows;
  if (rows.size() < 3)
    fail(ErrorKind::invalid_parameter, "verification needs at least 3 trajectory rows");

  double vmax = 0.0;
  for (const auto& row : rows) vmax = std::max(vmax, norm(row.v));
  if (vmax > 0.05 * u.c)
    fail(ErrorKind::domain_violation,
         "trajectory exceeds the v << c validity domain (max |v| > 0.05 c)");

  // Denominator floor guards the free-particle 0/0 case.
  constexpr double kFloor = 1e-300;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    const Vec3 ddr_dt = (rows[i + 1].dr - rows[i - 1].dr) / (2.0 * trajectory.dt);
    const double dev = norm(mass * ddr_dt - rows[i].dp) / std::max(norm(rows[i].dp), kFloor);
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace relspin::spinpart
