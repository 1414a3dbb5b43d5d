#ifndef PAC_PLANT_HPP
#define PAC_PLANT_HPP

#include <string>

#include "pac/rigid_body.hpp"

namespace pac {

/// Which output the controller under test closes its loop on.
enum class Channel { Altitude, Roll, Pitch };

Channel parse_channel(const std::string& name);
std::string to_string(Channel c);

/// Outer-loop plant. The command is an acceleration along the controlled
/// channel: vertical (m/s^2, up positive) for altitude, angular (rad/s^2)
/// for roll and pitch. Each plant runs its own inner attitude loop.
class Plant {
 public:
  virtual ~Plant() = default;

  /// Applies `command` for one step. `wind_body_x` is the gust speed along
  /// body x for this step.
  virtual void step(double command, double dt, double wind_body_x) = 0;

  virtual const RigidBodyState& state() const = 0;

  /// Symmetric actuator bound M_u on the command.
  virtual double command_limit() const = 0;

  virtual std::string name() const = 0;

  double output(Channel c) const;
};

}  // namespace pac

#endif  // PAC_PLANT_HPP
