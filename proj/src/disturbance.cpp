#include "pac/disturbance.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pac {

void GustSpec::validate() const {
  if (!(amplitude >= 0.0)) throw std::invalid_argument("gust amplitude must be >= 0");
  if (!(length > 0.0)) throw std::invalid_argument("gust length must be > 0");
  if (!(advection_speed >= 0.0)) throw std::invalid_argument("gust advection speed must be >= 0");
}

double gust_velocity(double distance, const GustSpec& spec) {
  if (distance < 0.0) return 0.0;
  if (distance > spec.length) return spec.amplitude;
  // cos(pi u) written as sin(pi (1/2 - u)) so u = 0, 1/2, 1 land exactly on 0, V/2, V.
  const double u = distance / spec.length;
  return 0.5 * spec.amplitude * (1.0 - std::sin(std::numbers::pi * (0.5 - u)));
}

double GustField::advance(double t, double forward_speed, double dt) {
  if (t < spec_.onset_time) return 0.0;
  const double wind = gust_velocity(distance_, spec_);
  distance_ += (spec_.advection_speed + std::abs(forward_speed)) * dt;
  return wind;
}

void ImpulseSpec::validate() const {
  if (!(duration > 0.0)) throw std::invalid_argument("impulse duration must be > 0");
}

double impulse_noise(double t, const ImpulseSpec& spec) {
  return (t >= spec.start && t < spec.start + spec.duration) ? spec.amplitude : 0.0;
}

}  // namespace pac
