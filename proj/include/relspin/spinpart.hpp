// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>
#include <vector>

#include "relspin/units.hpp"
#include "relspin/vec3.hpp"

namespace relspin::spinpart {

// Classical point particle carrying a rest-frame spin vector (units of
// action). Spin is torque-free in this layer: no precession model.
struct ClassicalSpinParticle {
  double mass = 1.0;
  Vec3 position;
  Vec3 momentum;
  Vec3 spin;
};

struct ConstantForce {
  Vec3 force;
};

// F(q) = test_charge * E_coulomb(source_charge, source_position; q),
// Gaussian units (no 4 pi eps0).
struct CoulombForce {
  double source_charge = 0.0;
  Vec3 source_position;
  double test_charge = 0.0;
};

using ForceSpec = std::variant<ConstantForce, CoulombForce>;

Vec3 evaluate_force(const ForceSpec& f, const Vec3& position);

struct TrajectoryRow {
  double t = 0.0;
  Vec3 q;   // lab-frame position
  Vec3 P;   // momentum
  Vec3 v;   // velocity
  Vec3 dr;  // centre-of-mass shift S x v / (m c^2) at this row
  Vec3 dp;  // hidden momentum S x F / (m c^2) at this row
};

// Uniform time series; t spacing is exactly i*dt, |v| < c at every row.
struct Trajectory {
  double dt = 0.0;
  std::vector<TrajectoryRow> rows;
};

struct ExplicitField {
  Vec3 E;
};

struct PointChargeField {
  double charge = 0.0;
  Vec3 separation;  // from the charge to the moment
};

// Magnetic moment in an electric field; k1 carries the unresolved sign
// convention between the M x E and E x M orderings.
struct EMScenario {
  Vec3 moment;
  std::variant<ExplicitField, PointChargeField> field;
  double k1 = 1.0;
};

// Displacement between the lab-frame and proper centres of mass of a
// spinning body: (S x v) / (m c^2).
Vec3 moller_shift(const Vec3& spin, const Vec3& velocity, double mass, const UnitSystem& u);

// Hidden momentum (S x F) / (m c^2) under an external force F.
Vec3 hidden_momentum_force(const Vec3& spin, const Vec3& force, double mass, const UnitSystem& u);

// Acceleration form (S x a) / c^2. hidden_momentum_force is defined through
// this function so the two agree to the last bit when F = m a.
Vec3 hidden_momentum_accel(const Vec3& spin, const Vec3& acceleration, const UnitSystem& u);

// Electromagnetic form k1 (M x E) / c^2.
Vec3 hidden_momentum_em(const EMScenario& scenario, const UnitSystem& u);

// E = e r_hat / r^2, Gaussian units; direction from source to eval point.
Vec3 coulomb_field(double charge, const Vec3& source, const Vec3& eval);

// Magnitude ratio of the spin-corrected position-shift prefactor 2/(P0 v^2)
// to the hidden-momentum prefactor 1/(m c^2): equals 2 c^2 / (gamma v^2).
double shift_scale_ratio(const Vec3& velocity, double mass, const UnitSystem& u);

// Fixed-step RK4 on dP/dt = F(q), dq/dt = v(P); spin held constant. Rows
// carry the shift and hidden-momentum diagnostics evaluated at each sample.
Trajectory integrate(const ClassicalSpinParticle& start, const ForceSpec& force, double dt,
                     int steps, const UnitSystem& u);

// Max over interior rows of |m d(dr)/dt - dp| / max(|dp|, floor), with the
// time derivative taken by central differences. Valid only for |v| << c;
// rows faster than 0.05 c are rejected as a domain violation.
double verify_hidden_momentum(const Trajectory& trajectory, double mass, const UnitSystem& u);

}  // namespace relspin::spinpart
