// Closed-loop experiment runner and its file outputs.

#ifndef PAC_EXPERIMENT_HPP
#define PAC_EXPERIMENT_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pac/config.hpp"
#include "pac/controller.hpp"
#include "pac/timeseries.hpp"

namespace pac {

struct MetricsReport {
  std::optional<double> rmse;
  std::optional<double> rise_time_ms;
  std::optional<double> settling_time_ms;
  std::optional<double> peak;
  std::optional<std::size_t> final_rules;  // evolving controllers only
};

struct ExperimentResult {
  std::string label;
  std::string plant;
  std::string trajectory;
  std::string controller;
  double dt = 0.0;
  std::uint64_t seed = 0;
  TimeSeries series;
  std::vector<EvolutionEvent> events;
  std::vector<HyperplaneRule> final_rules;
  MetricsReport metrics;
  bool diverged = false;
  std::string error;
};

std::unique_ptr<Plant> make_plant(const ExperimentConfig& cfg);
std::unique_ptr<Controller> make_controller(const ExperimentConfig& cfg, const std::string& name);

/// Runs one controller against the configured plant and trajectory. Each
/// step reads y_r(t), adds measurement noise to the plant output, steps the
/// controller, then steps the plant under the gust. A non-finite value stops
/// the run: the partial series is kept and `diverged` is set.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::string& controller);

MetricsReport compute_report(const TimeSeries& series, double dt, const StepMetricOptions& opt,
                             std::optional<std::size_t> final_rules);

inline constexpr const char* kSummaryHeader =
    "plant,trajectory,controller,label,rmse,rise_time_ms,settling_time_ms,peak,final_rules,"
    "steps,status";
inline constexpr const char* kEvolutionHeader = "time_s,event,rule_count,bias,variance";

std::string summary_row(const ExperimentResult& r);
void write_evolution_log(std::ostream& os, const ExperimentResult& r);
void write_rule_snapshot(std::ostream& os, const ExperimentResult& r);

/// Writes <label>_<controller>_steps.csv, _evolution.csv and _rules.csv
/// (the last two only for evolving controllers) into `dir`.
void write_experiment_files(const std::string& dir, const ExperimentResult& r);
void write_summary(const std::string& path, const std::vector<ExperimentResult>& results);

}  // namespace pac

#endif  // PAC_EXPERIMENT_HPP
