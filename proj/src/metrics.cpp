#include "pac/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace pac {

std::optional<double> compute_rmse(const std::vector<double>& y, const std::vector<double>& y_r) {
  if (y.size() != y_r.size()) throw std::invalid_argument("series lengths differ");
  if (y.empty()) return std::nullopt;
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double e = y_r[i] - y[i];
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(y.size()));
}

StepMetrics compute_step_metrics(const std::vector<double>& y, const std::vector<double>& y_r,
                                 double dt, const StepMetricOptions& opt) {
  if (y.size() != y_r.size()) throw std::invalid_argument("series lengths differ");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  StepMetrics m;
  if (y.empty()) return m;

  std::size_t peak_idx = 0;
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i] > y[peak_idx]) peak_idx = i;
  }
  m.peak = y[peak_idx];
  m.peak_time = static_cast<double>(peak_idx) * dt;

  const double y0 = y.front();
  std::size_t onset = 0;
  while (onset < y_r.size() && y_r[onset] == y0) ++onset;
  if (onset == y_r.size()) {
    // Reference never leaves the initial output: nothing to rise to.
    m.settling_time = 0.0;
    return m;
  }
  const double target = y_r[onset];
  const double delta = target - y0;

  // Rise: progress fraction along the commanded step.
  std::optional<std::size_t> low_idx, high_idx;
  for (std::size_t i = onset; i < y.size(); ++i) {
    const double frac = (y[i] - y0) / delta;
    if (!low_idx && frac >= opt.rise_low) low_idx = i;
    if (frac >= opt.rise_high) {
      high_idx = i;
      break;
    }
  }
  if (low_idx && high_idx) m.rise_time = static_cast<double>(*high_idx - *low_idx) * dt;

  const double final_ref = y_r.back();
  double band = opt.settle_band * std::abs(final_ref);
  if (band == 0.0) band = opt.settle_band * std::abs(delta);
  std::optional<std::size_t> last_out;
  for (std::size_t i = onset; i < y.size(); ++i) {
    if (std::abs(y[i] - final_ref) > band) last_out = i;
  }
  if (!last_out) {
    m.settling_time = 0.0;
  } else if (*last_out + 1 < y.size()) {
    m.settling_time = static_cast<double>(*last_out + 1 - onset) * dt;
  }
  return m;
}

}  // namespace pac
