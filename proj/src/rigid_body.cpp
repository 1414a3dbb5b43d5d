#include "pac/rigid_body.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pac {

namespace {

using State12 = Eigen::Matrix<double, 12, 1>;

State12 pack(const RigidBodyState& s) {
  State12 x;
  x << s.position, s.velocity, s.attitude, s.rates;
  return x;
}

RigidBodyState unpack(const State12& x) {
  RigidBodyState s;
  s.position = x.segment<3>(0);
  s.velocity = x.segment<3>(3);
  s.attitude = x.segment<3>(6);
  s.rates = x.segment<3>(9);
  return s;
}

}  // namespace

bool RigidBodyState::finite() const {
  return position.allFinite() && velocity.allFinite() && attitude.allFinite() &&
         rates.allFinite();
}

void InertiaSet::validate() const {
  if (!(mass > 0.0) || !(ix > 0.0) || !(iy > 0.0) || !(iz > 0.0)) {
    throw std::invalid_argument("mass and principal inertias must be positive");
  }
  if (ix * iz - ixz * ixz == 0.0) {
    throw std::invalid_argument("singular roll/yaw inertia block (Ix Iz == Ixz^2)");
  }
}

Mat3 body_to_inertial(const Vec3& att) {
  const double cf = std::cos(att[0]), sf = std::sin(att[0]);
  const double ct = std::cos(att[1]), st = std::sin(att[1]);
  const double cp = std::cos(att[2]), sp = std::sin(att[2]);
  Mat3 r;
  r << ct * cp, sf * st * cp - cf * sp, cf * st * cp + sf * sp,
       ct * sp, sf * st * sp + cf * cp, cf * st * sp - sf * cp,
       -st,     sf * ct,                cf * ct;
  return r;
}

Mat3 inertial_to_body(const Vec3& attitude) { return body_to_inertial(attitude).transpose(); }

double wrap_angle(double angle) {
  constexpr double pi = std::numbers::pi;
  double a = std::remainder(angle, 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;
  return a;
}

double kinetic_energy(const RigidBodyState& s, const InertiaSet& in) {
  const double p = s.rates[0], q = s.rates[1], r = s.rates[2];
  const double rot = in.ix * p * p + in.iy * q * q + in.iz * r * r - 2.0 * in.ixz * p * r;
  return 0.5 * in.mass * s.velocity.squaredNorm() + 0.5 * rot;
}

State12 rigid_body_derivative(const RigidBodyState& s, const InertiaSet& in, const Vec3& force,
                              const Vec3& moment) {
  const double u = s.velocity[0], v = s.velocity[1], w = s.velocity[2];
  const double p = s.rates[0], q = s.rates[1], r = s.rates[2];
  const double phi = s.attitude[0], theta = s.attitude[1];

  State12 d;
  d.segment<3>(0) = body_to_inertial(s.attitude) * s.velocity;

  // F = m (v_dot + omega x v), solved for v_dot.
  d[3] = force[0] / in.mass - q * w + r * v;
  d[4] = force[1] / in.mass - r * u + p * w;
  d[5] = force[2] / in.mass - p * v + q * u;

  const double sf = std::sin(phi), cf = std::cos(phi);
  const double ct = std::cos(theta), tt = std::tan(theta);
  d[6] = p + (q * sf + r * cf) * tt;
  d[7] = q * cf - r * sf;
  d[8] = (q * sf + r * cf) / ct;

  // Ix p_dot - Ixz r_dot = L - qr (Iz - Iy) + Ixz pq
  // -Ixz p_dot + Iz r_dot = N - pq (Iy - Ix) - Ixz qr
  const double rhs_l = moment[0] - q * r * (in.iz - in.iy) + in.ixz * p * q;
  const double rhs_n = moment[2] - p * q * (in.iy - in.ix) - in.ixz * q * r;
  const double det = in.ix * in.iz - in.ixz * in.ixz;
  d[9] = (in.iz * rhs_l + in.ixz * rhs_n) / det;
  d[11] = (in.ixz * rhs_l + in.ix * rhs_n) / det;
  d[10] = (moment[1] - r * p * (in.ix - in.iz) - in.ixz * (p * p - r * r)) / in.iy;
  return d;
}

RigidBodyState rigid_body_step(const RigidBodyState& s, const InertiaSet& in, const Vec3& force,
                               const Vec3& moment, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  in.validate();
  const State12 x0 = pack(s);
  auto f = [&](const State12& x) { return rigid_body_derivative(unpack(x), in, force, moment); };
  const State12 k1 = f(x0);
  const State12 k2 = f(x0 + 0.5 * dt * k1);
  const State12 k3 = f(x0 + 0.5 * dt * k2);
  const State12 k4 = f(x0 + dt * k3);
  RigidBodyState next = unpack(x0 + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  for (int i = 0; i < 3; ++i) next.attitude[i] = wrap_angle(next.attitude[i]);
  return next;
}

}  // namespace pac
