#include "pac/hexacopter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pac {

namespace {

using Allocation = Eigen::Matrix<double, 4, 6>;

Allocation allocation_matrix(const HexacopterParams& p) {
  const auto pos = rotor_positions(p);
  const auto spin = rotor_spin(p);
  Allocation a;
  for (int i = 0; i < 6; ++i) {
    a(0, i) = p.k_thrust;
    a(1, i) = -p.k_thrust * pos[i][1];
    a(2, i) = p.k_thrust * pos[i][0];
    a(3, i) = spin[i] * p.k_torque;
  }
  return a;
}

}  // namespace

void HexacopterParams::validate() const {
  inertia.validate();
  if (!(arm_length > 0.0) || !(k_thrust > 0.0) || !(k_torque > 0.0) || !(max_rotor_speed > 0.0)) {
    throw std::invalid_argument("rotor geometry and constants must be positive");
  }
  if (!(command_limit > 0.0)) throw std::invalid_argument("command limit must be positive");
  if (linear_drag < 0.0) throw std::invalid_argument("drag must be non-negative");
}

std::array<Vec3, 6> rotor_positions(const HexacopterParams& p) {
  std::array<Vec3, 6> pos;
  for (int i = 0; i < 6; ++i) {
    const double a = std::numbers::pi / 6.0 + i * std::numbers::pi / 3.0;
    pos[i] = Vec3(p.arm_length * std::cos(a), p.arm_length * std::sin(a), 0.0);
  }
  return pos;
}

std::array<double, 6> rotor_spin(const HexacopterParams&) { return {1, -1, 1, -1, 1, -1}; }

RotorSpeeds hexacopter_mixing(const HexacopterParams& p, double thrust_cmd, double roll_cmd,
                              double pitch_cmd, double yaw_cmd) {
  const Allocation a = allocation_matrix(p);
  const Eigen::Matrix<double, 6, 4> pinv = a.transpose() * (a * a.transpose()).inverse();
  const Eigen::Matrix<double, 6, 1> sq = pinv * Eigen::Vector4d(thrust_cmd, roll_cmd, pitch_cmd, yaw_cmd);
  const double max_sq = p.max_rotor_speed * p.max_rotor_speed;
  RotorSpeeds speeds;
  for (int i = 0; i < 6; ++i) speeds[i] = std::sqrt(std::clamp(sq[i], 0.0, max_sq));
  return speeds;
}

RotorWrench rotor_wrench(const HexacopterParams& p, const RotorSpeeds& speeds) {
  Eigen::Matrix<double, 6, 1> sq;
  for (int i = 0; i < 6; ++i) sq[i] = speeds[i] * speeds[i];
  const Eigen::Vector4d w = allocation_matrix(p) * sq;
  return {w[0], Vec3(w[1], w[2], w[3])};
}

double hover_rotor_speed(const HexacopterParams& p) {
  return std::sqrt(p.inertia.mass * kGravity / (6.0 * p.k_thrust));
}

Hexacopter::Hexacopter(const HexacopterParams& params, Channel channel,
                       const RigidBodyState& initial)
    : params_(params), channel_(channel), state_(initial), hold_altitude_(-initial.position[2]) {
  params_.validate();
  speeds_.fill(hover_rotor_speed(params_));
}

void Hexacopter::step(double command, double dt, double wind_body_x) {
  const InertiaSet& in = params_.inertia;
  const auto& att = state_.attitude;
  const auto& rates = state_.rates;
  const double u = std::clamp(command, -params_.command_limit, params_.command_limit);

  auto hold = [&](int axis) {
    return params_.attitude.kp * (0.0 - att[axis]) - params_.attitude.kd * rates[axis];
  };
  double roll_acc = hold(0);
  double pitch_acc = hold(1);
  const double yaw_acc = hold(2);
  if (channel_ == Channel::Roll) roll_acc = u - params_.rate_damping * rates[0];
  if (channel_ == Channel::Pitch) pitch_acc = u - params_.rate_damping * rates[1];

  double vertical_acc = u;
  if (channel_ != Channel::Altitude) {
    const double climb = -(body_to_inertial(att) * state_.velocity)[2];
    const double altitude = -state_.position[2];
    vertical_acc = params_.altitude_hold.kp * (hold_altitude_ - altitude) -
                   params_.altitude_hold.kd * climb;
  }
  const double tilt = std::max(std::cos(att[0]) * std::cos(att[1]), 0.5);
  const double thrust = in.mass * (kGravity + vertical_acc) / tilt;

  speeds_ = hexacopter_mixing(params_, thrust, in.ix * roll_acc, in.iy * pitch_acc,
                              in.iz * yaw_acc);
  const RotorWrench wrench = rotor_wrench(params_, speeds_);

  Vec3 force(0.0, 0.0, -wrench.thrust);
  force += inertial_to_body(att) * Vec3(0.0, 0.0, in.mass * kGravity);
  const Vec3 drag = -params_.linear_drag * (state_.velocity - Vec3(wind_body_x, 0.0, 0.0));
  force += drag;
  const Vec3 moment = wrench.moment + Vec3(0.0, 0.0, -params_.drag_center_height).cross(drag);

  state_ = rigid_body_step(state_, in, force, moment, dt);
  if (!state_.finite()) throw std::runtime_error("hexacopter state diverged");
}

}  // namespace pac
