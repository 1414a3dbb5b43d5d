// Hexacopter: six rotors on a symmetric X-hex frame with quadratic thrust and
// drag-torque laws, pseudo-inverse linear mixing, and fixed-gain PD attitude
// stabilization on the axes the outer controller does not drive.

#ifndef PAC_HEXACOPTER_HPP
#define PAC_HEXACOPTER_HPP

#include <array>

#include "pac/plant.hpp"
#include "pac/rigid_body.hpp"

namespace pac {

using RotorSpeeds = std::array<double, 6>;

struct AttitudeGains {
  double kp = 36.0;  // 1/s^2
  double kd = 12.0;  // 1/s
};

struct HexacopterParams {
  InertiaSet inertia{};
  double arm_length = 0.25;      // m
  double k_thrust = 1.0e-5;      // N / (rad/s)^2
  double k_torque = 1.5e-7;      // N m / (rad/s)^2
  double max_rotor_speed = 1200; // rad/s
  double linear_drag = 0.3;      // N / (m/s), body axes
  double drag_center_height = 0.05;  // m above the CG where drag acts
  double command_limit = 9.0;    // M_u
  AttitudeGains attitude{};
  double rate_damping = 4.0;     // 1/s, inner rate loop on the driven axis
  AttitudeGains altitude_hold{4.0, 4.0};
  // Moving-mass CG channels of the over-actuated variant. Accepted, no effect.
  double cg_x_command = 0.0;
  double cg_y_command = 0.0;

  void validate() const;
};

struct RotorWrench {
  double thrust = 0.0;  // N, along -z body
  Vec3 moment = Vec3::Zero();
};

/// Rotor positions in body axes (z = 0) and spin signs.
std::array<Vec3, 6> rotor_positions(const HexacopterParams& p);
std::array<double, 6> rotor_spin(const HexacopterParams& p);

/// Rotor speeds realizing the requested total thrust (N) and body moments
/// (N m) through the minimum-norm allocation, clamped to [0, max_rotor_speed].
RotorSpeeds hexacopter_mixing(const HexacopterParams& p, double thrust_cmd, double roll_cmd,
                              double pitch_cmd, double yaw_cmd);

/// Thrust and moments produced by the given rotor speeds.
RotorWrench rotor_wrench(const HexacopterParams& p, const RotorSpeeds& speeds);

/// Rotor speed at which six rotors together carry the weight.
double hover_rotor_speed(const HexacopterParams& p);

class Hexacopter final : public Plant {
 public:
  Hexacopter(const HexacopterParams& params, Channel channel,
             const RigidBodyState& initial = {});

  void step(double command, double dt, double wind_body_x) override;
  const RigidBodyState& state() const override { return state_; }
  double command_limit() const override { return params_.command_limit; }
  std::string name() const override { return "hexacopter"; }

  const RotorSpeeds& rotor_speeds() const { return speeds_; }
  const HexacopterParams& params() const { return params_; }

 private:
  HexacopterParams params_;
  Channel channel_;
  RigidBodyState state_;
  RotorSpeeds speeds_{};
  double hold_altitude_;
};

}  // namespace pac

#endif  // PAC_HEXACOPTER_HPP
