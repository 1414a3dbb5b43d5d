// Baseline PID with conditional-integration anti-windup.

#ifndef PAC_PID_HPP
#define PAC_PID_HPP

#include <utility>

#include "pac/control_loop.hpp"

namespace pac {

struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
};

struct PidState {
  PidGains gains;
  double err_integral = 0.0;
  double e_prev = 0.0;
  bool primed = false;  // e_prev holds a real sample
  double out_min = -10.0;
  double out_max = 10.0;
};

/// u = clamp(kp e + ki int(e) + kd e_dot). The integral is only advanced when
/// the unclamped output with the advanced integral stays inside the limits,
/// or when the error drives it back toward them.
double pid_step(PidState& s, double e, double dt);

class PidController final : public Controller {
 public:
  PidController(PidGains gains, double out_min, double out_max);

  double step(double y, double y_r, double dt) override;
  StepRecord last_record() const override { return last_; }
  std::string name() const override { return "pid"; }
  const PidState& state() const { return state_; }

 private:
  PidState state_;
  StepRecord last_;
};

}  // namespace pac

#endif  // PAC_PID_HPP
