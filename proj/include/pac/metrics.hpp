// Tracking metrics computed from logged series. Undefined values are empty
// optionals rather than sentinels.

#ifndef PAC_METRICS_HPP
#define PAC_METRICS_HPP

#include <optional>
#include <vector>

namespace pac {

struct StepMetricOptions {
  double rise_low = 0.1;
  double rise_high = 0.9;
  double settle_band = 0.02;  // fraction of |final reference|
};

struct StepMetrics {
  std::optional<double> rise_time;      // s
  std::optional<double> settling_time;  // s, measured from the step onset
  std::optional<double> peak;
  std::optional<double> peak_time;  // s
};

/// Root mean squared tracking error; empty for empty input.
/// Throws std::invalid_argument on a length mismatch.
std::optional<double> compute_rmse(const std::vector<double>& y, const std::vector<double>& y_r);

/// The commanded step runs from y[0] to the first reference sample that
/// differs from y[0]; the onset is that sample's time. Rise time is the
/// 10 % to 90 % traversal of that step. Settling time is when the response
/// last leaves the band around the final reference (zero if it never leaves,
/// empty if it ends outside). Peak is the maximum of y.
StepMetrics compute_step_metrics(const std::vector<double>& y, const std::vector<double>& y_r,
                                 double dt, const StepMetricOptions& opt = {});

}  // namespace pac

#endif  // PAC_METRICS_HPP
