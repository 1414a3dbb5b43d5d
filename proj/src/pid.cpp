#include "pac/pid.hpp"

#include <algorithm>
#include <stdexcept>

namespace pac {

double pid_step(PidState& s, double e, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const double e_dot = s.primed ? (e - s.e_prev) / dt : 0.0;
  s.e_prev = e;
  s.primed = true;

  const double pd = s.gains.kp * e + s.gains.kd * e_dot;
  const double candidate = s.err_integral + e * dt;
  const double raw = pd + s.gains.ki * candidate;
  const bool high = raw > s.out_max;
  const bool low = raw < s.out_min;
  // Freeze the integral while saturated unless the error unwinds it.
  if (!(high && e > 0.0) && !(low && e < 0.0)) s.err_integral = candidate;

  return std::clamp(pd + s.gains.ki * s.err_integral, s.out_min, s.out_max);
}

PidController::PidController(PidGains gains, double out_min, double out_max) {
  if (gains.kp < 0.0 || gains.ki < 0.0 || gains.kd < 0.0) {
    throw std::invalid_argument("PID gains must be non-negative");
  }
  if (!(out_min < out_max)) throw std::invalid_argument("PID output limits are inverted");
  state_.gains = gains;
  state_.out_min = out_min;
  state_.out_max = out_max;
}

double PidController::step(double y, double y_r, double dt) {
  const double e = y_r - y;
  const double u = pid_step(state_, e, dt);
  last_ = StepRecord{};
  last_.e = e;
  last_.u = u;
  return u;
}

}  // namespace pac
