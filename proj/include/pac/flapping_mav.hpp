// Bio-inspired four-wing flapping MAV. Each wing is a cycle-averaged lift
// source at a fixed centre of pressure; wing forces and the gravity term are
// aggregated in the body frame and the wing moments taken about the CG.
//
// The lift surrogate is linear in flapping amplitude, F = k_L f^2 A, and the
// attitude loop supplies whatever moment holds the body level (the real
// vehicle's stroke-plane and moving-mass actuation is not modelled).

#ifndef PAC_FLAPPING_MAV_HPP
#define PAC_FLAPPING_MAV_HPP

#include <array>

#include "pac/hexacopter.hpp"
#include "pac/plant.hpp"
#include "pac/rigid_body.hpp"

namespace pac {

struct FlapGeometry {
  Vec3 cg = Vec3::Zero();
  std::array<Vec3, 4> cp{Vec3(0.08, 0.05, 0.0), Vec3(0.08, 0.05, 0.0), Vec3(0.08, -0.05, 0.0),
                         Vec3(-0.08, -0.05, 0.0)};
  // Flapping parameters: stroke-plane angle, frequency, amplitude, angle of
  // attack, phase offset, pitch delay, time scale. Only frequency and
  // amplitude enter the lift surrogate.
  double spa = 0.0;
  double ff = 20.0;  // Hz
  double fa = 0.6;   // rad
  double aoa = 0.0;
  double po = 0.0;
  double pd = 0.0;
  double ts = 1.0;
};

struct FlappingMavParams {
  InertiaSet inertia{0.05, 2.0e-4, 2.0e-4, 1.0e-4, 0.0};
  FlapGeometry geometry{};
  double max_amplitude = 1.2;  // fa_max, rad
  double linear_drag = 0.01;   // N / (m/s)
  double drag_center_height = 0.02;  // m above the CG where drag acts
  double command_limit = 9.0;  // M_u
  AttitudeGains attitude{100.0, 20.0};

  void validate() const;

  /// Lift constant placing hover at half the amplitude range.
  double lift_constant() const;
  double hover_amplitude() const { return 0.5 * max_amplitude; }
};

/// Per-wing cycle-averaged force [0, 0, -k_L ff^2 fa] with fa clamped to
/// [0, max_amplitude].
Vec3 flapping_actuator(double amplitude, double frequency, double lift_constant,
                       double max_amplitude);

struct ForceMoment {
  Vec3 force = Vec3::Zero();
  Vec3 moment = Vec3::Zero();
};

/// F_T = sum F_a_i + DCM (m g e_z);  M_T = sum F_a_i x (CG - CP_i).
ForceMoment bifwmav_force_moment(const std::array<Vec3, 4>& wing_forces, const Vec3& attitude,
                                 double mass, const FlapGeometry& geometry);

class FlappingWingMav final : public Plant {
 public:
  FlappingWingMav(const FlappingMavParams& params, Channel channel,
                  const RigidBodyState& initial = {});

  void step(double command, double dt, double wind_body_x) override;
  const RigidBodyState& state() const override { return state_; }
  double command_limit() const override { return params_.command_limit; }
  std::string name() const override { return "bifwmav"; }

  double amplitude() const { return amplitude_; }
  const ForceMoment& last_wings() const { return last_; }

 private:
  FlappingMavParams params_;
  RigidBodyState state_;
  double amplitude_;
  ForceMoment last_;
};

}  // namespace pac

#endif  // PAC_FLAPPING_MAV_HPP
