// 12-state rigid body in body axes with Euler-angle attitude (Z-Y-X) and a
// north-east-down inertial frame. Forces and moments are body-frame and held
// constant over a step; integration is classical RK4.

#ifndef PAC_RIGID_BODY_HPP
#define PAC_RIGID_BODY_HPP

#include <Eigen/Dense>

namespace pac {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kGravity = 9.81;

struct RigidBodyState {
  Vec3 position = Vec3::Zero();  // X_b, Y_b, Z_b (m, NED)
  Vec3 velocity = Vec3::Zero();  // u, v, w (m/s, body)
  Vec3 attitude = Vec3::Zero();  // phi, theta, psi (rad)
  Vec3 rates = Vec3::Zero();     // p, q, r (rad/s)

  bool finite() const;
};

struct InertiaSet {
  double mass = 3.0;
  double ix = 0.04;
  double iy = 0.04;
  double iz = 0.06;
  double ixz = 0.0;

  /// Throws std::invalid_argument on non-positive terms or a singular (p, r) block.
  void validate() const;
};

/// Rotation taking body-frame vectors into the inertial frame.
Mat3 body_to_inertial(const Vec3& attitude);

/// Direction-cosine matrix taking inertial vectors into the body frame.
Mat3 inertial_to_body(const Vec3& attitude);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

/// Translational plus rotational kinetic energy.
double kinetic_energy(const RigidBodyState& s, const InertiaSet& inertia);

/// Time derivative of the state as a 12-vector
/// [position, velocity, attitude, rates].
Eigen::Matrix<double, 12, 1> rigid_body_derivative(const RigidBodyState& s,
                                                   const InertiaSet& inertia,
                                                   const Vec3& force, const Vec3& moment);

RigidBodyState rigid_body_step(const RigidBodyState& s, const InertiaSet& inertia,
                               const Vec3& force, const Vec3& moment, double dt);

}  // namespace pac

#endif  // PAC_RIGID_BODY_HPP
