// Experiment configuration and its JSON encoding.
//
// A run file holds one experiment object. A suite file holds
// {"defaults": {...}, "experiments": [{...}, ...]}; each experiment is the
// defaults with the entry merge-patched over them. Unknown keys are errors.

#ifndef PAC_CONFIG_HPP
#define PAC_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pac/controller.hpp"
#include "pac/disturbance.hpp"
#include "pac/flapping_mav.hpp"
#include "pac/hexacopter.hpp"
#include "pac/metrics.hpp"
#include "pac/pid.hpp"
#include "pac/plant.hpp"
#include "pac/trajectory.hpp"

namespace pac {

enum class PlantKind { Hexacopter, FlappingMav };

PlantKind parse_plant(const std::string& name);
std::string to_string(PlantKind k);

struct ExperimentConfig {
  std::string name;  // empty: derived from plant, channel and trajectory
  PlantKind plant = PlantKind::Hexacopter;
  Channel channel = Channel::Altitude;
  std::vector<std::string> controllers{"pac", "pid"};
  TrajectorySpec trajectory = Constant{4.0};
  double duration = 100.0;  // s
  double dt = 0.01;         // s
  double initial_altitude = 0.0;
  std::optional<GustSpec> gust;
  std::optional<ImpulseSpec> impulse;
  PacConfig pac{};
  PidGains pid{4.0, 0.5, 4.0};
  HexacopterParams hexacopter{};
  FlappingMavParams bifwmav{};
  StepMetricOptions metrics{};
  std::string output_dir = "out";
  std::uint64_t seed = 0;

  std::size_t step_count() const;
  double command_limit() const;
  /// Name used for output files and summary rows.
  std::string label() const;
  /// Throws std::invalid_argument.
  void validate() const;
};

/// Gains that track well on each plant/channel pair.
PidGains default_pid_gains(PlantKind plant, Channel channel);

ExperimentConfig parse_experiment(const std::string& json_text);
std::vector<ExperimentConfig> parse_suite(const std::string& json_text);

ExperimentConfig load_experiment(const std::string& path);
std::vector<ExperimentConfig> load_suite(const std::string& path);

/// Canonical JSON of a config (every field explicit).
std::string dump_experiment(const ExperimentConfig& cfg);

}  // namespace pac

#endif  // PAC_CONFIG_HPP
