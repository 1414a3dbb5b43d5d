#include "pac/flapping_mav.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pac {

void FlappingMavParams::validate() const {
  inertia.validate();
  if (!(max_amplitude > 0.0) || !(geometry.ff > 0.0)) {
    throw std::invalid_argument("flapping amplitude range and frequency must be positive");
  }
  if (!(command_limit > 0.0)) throw std::invalid_argument("command limit must be positive");
}

double FlappingMavParams::lift_constant() const {
  return inertia.mass * kGravity / (4.0 * geometry.ff * geometry.ff * hover_amplitude());
}

Vec3 flapping_actuator(double amplitude, double frequency, double lift_constant,
                       double max_amplitude) {
  const double a = std::clamp(amplitude, 0.0, max_amplitude);
  return Vec3(0.0, 0.0, -lift_constant * frequency * frequency * a);
}

ForceMoment bifwmav_force_moment(const std::array<Vec3, 4>& wing_forces, const Vec3& attitude,
                                 double mass, const FlapGeometry& geometry) {
  ForceMoment fm;
  for (std::size_t i = 0; i < 4; ++i) {
    fm.force += wing_forces[i];
    fm.moment += wing_forces[i].cross(geometry.cg - geometry.cp[i]);
  }
  fm.force += inertial_to_body(attitude) * Vec3(0.0, 0.0, mass * kGravity);
  return fm;
}

FlappingWingMav::FlappingWingMav(const FlappingMavParams& params, Channel channel,
                                 const RigidBodyState& initial)
    : params_(params), state_(initial), amplitude_(params.hover_amplitude()) {
  params_.validate();
  if (channel != Channel::Altitude) {
    throw std::invalid_argument("the flapping-wing plant only exposes the altitude channel");
  }
}

void FlappingWingMav::step(double command, double dt, double wind_body_x) {
  const InertiaSet& in = params_.inertia;
  const auto& g = params_.geometry;
  const double u = std::clamp(command, -params_.command_limit, params_.command_limit);
  const auto& att = state_.attitude;

  const double tilt = std::max(std::cos(att[0]) * std::cos(att[1]), 0.5);
  amplitude_ = params_.hover_amplitude() * (1.0 + u / kGravity) / tilt;
  const Vec3 wing = flapping_actuator(amplitude_, g.ff, params_.lift_constant(),
                                      params_.max_amplitude);
  last_ = bifwmav_force_moment({wing, wing, wing, wing}, att, in.mass, g);

  Vec3 hold;
  for (int i = 0; i < 3; ++i) {
    hold[i] = params_.attitude.kp * (0.0 - att[i]) - params_.attitude.kd * state_.rates[i];
  }
  const Vec3 inertia_diag(in.ix, in.iy, in.iz);
  const Vec3 drag = -params_.linear_drag * (state_.velocity - Vec3(wind_body_x, 0.0, 0.0));
  const Vec3 drag_moment = Vec3(0.0, 0.0, -params_.drag_center_height).cross(drag);
  // The attitude actuator cancels the wing moment and adds the PD hold; the
  // drag moment is left for the loop to reject.
  const Vec3 moment =
      last_.moment + (inertia_diag.cwiseProduct(hold) - last_.moment) + drag_moment;
  const Vec3 force = last_.force + drag;

  state_ = rigid_body_step(state_, in, force, moment, dt);
  if (!state_.finite()) throw std::runtime_error("flapping-wing state diverged");
}

}  // namespace pac
