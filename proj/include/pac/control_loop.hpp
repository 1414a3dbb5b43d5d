#ifndef PAC_CONTROL_LOOP_HPP
#define PAC_CONTROL_LOOP_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pac {

/// Per-step values every controller reports to the harness. Controllers
/// without a sliding surface or rule base leave those fields at zero.
struct StepRecord {
  double e = 0.0;
  double s_l = 0.0;
  double u_src = 0.0;
  double u_palm = 0.0;
  double u = 0.0;
  std::size_t rule_count = 0;
  double bias = 0.0;
  double variance = 0.0;
};

/// Common stepping interface: (measured output, reference, dt) -> command.
class Controller {
 public:
  virtual ~Controller() = default;
  virtual double step(double y, double y_r, double dt) = 0;
  virtual StepRecord last_record() const = 0;
  virtual std::string name() const = 0;
};

/// Raised when a controller produces a non-finite value.
class ControllerFault : public std::runtime_error {
 public:
  ControllerFault(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace pac

#endif  // PAC_CONTROL_LOOP_HPP
