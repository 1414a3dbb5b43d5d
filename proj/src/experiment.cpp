#include "pac/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pac/flapping_mav.hpp"
#include "pac/hexacopter.hpp"
#include "pac/metrics.hpp"
#include "pac/pid.hpp"

namespace pac {

namespace {

// Outputs beyond this magnitude count as divergence even while finite.
constexpr double kDivergenceBound = 1.0e4;

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : "NA";
}

}  // namespace

std::unique_ptr<Plant> make_plant(const ExperimentConfig& cfg) {
  RigidBodyState init;
  init.position[2] = -cfg.initial_altitude;
  if (cfg.plant == PlantKind::Hexacopter) {
    return std::make_unique<Hexacopter>(cfg.hexacopter, cfg.channel, init);
  }
  return std::make_unique<FlappingWingMav>(cfg.bifwmav, cfg.channel, init);
}

std::unique_ptr<Controller> make_controller(const ExperimentConfig& cfg, const std::string& name) {
  if (name == "pac") return std::make_unique<PacController>(cfg.pac);
  if (name == "pid") {
    const double lim = cfg.command_limit();
    return std::make_unique<PidController>(cfg.pid, -lim, lim);
  }
  throw std::invalid_argument("unknown controller '" + name + "'");
}

MetricsReport compute_report(const TimeSeries& series, double dt, const StepMetricOptions& opt,
                             std::optional<std::size_t> final_rules) {
  std::vector<double> y, y_r;
  y.reserve(series.size());
  y_r.reserve(series.size());
  for (const auto& row : series) {
    y.push_back(row.y);
    y_r.push_back(row.y_r);
  }
  MetricsReport rep;
  rep.final_rules = final_rules;
  rep.rmse = compute_rmse(y, y_r);
  if (series.empty()) return rep;
  const StepMetrics sm = compute_step_metrics(y, y_r, dt, opt);
  if (sm.rise_time) rep.rise_time_ms = *sm.rise_time * 1000.0;
  if (sm.settling_time) rep.settling_time_ms = *sm.settling_time * 1000.0;
  rep.peak = sm.peak;
  return rep;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::string& controller) {
  cfg.validate();
  ExperimentResult res;
  res.label = cfg.label();
  res.plant = to_string(cfg.plant);
  res.trajectory = trajectory_name(cfg.trajectory);
  res.controller = controller;
  res.dt = cfg.dt;
  res.seed = cfg.seed;

  auto plant = make_plant(cfg);
  auto ctrl = make_controller(cfg, controller);
  auto* pac = dynamic_cast<PacController*>(ctrl.get());
  std::optional<GustField> gust;
  if (cfg.gust) gust.emplace(*cfg.gust);

  const std::size_t n = cfg.step_count();
  res.series.reserve(n);
  try {
    for (std::size_t k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) * cfg.dt;
      const double y_r = reference(cfg.trajectory, t);
      double y = plant->output(cfg.channel);
      if (cfg.impulse) y += impulse_noise(t, *cfg.impulse);

      const double u = ctrl->step(y, y_r, cfg.dt);
      const StepRecord rec = ctrl->last_record();
      res.series.push_back({t, y_r, y, rec.e, rec.s_l, rec.u_src, rec.u_palm, rec.u,
                            rec.rule_count, rec.bias, rec.variance});

      const double wind = gust ? gust->advance(t, plant->state().velocity[0], cfg.dt) : 0.0;
      plant->step(u, cfg.dt, wind);
      if (!(std::abs(plant->output(cfg.channel)) < kDivergenceBound)) {
        throw std::runtime_error("plant output left the admissible range");
      }
    }
  } catch (const std::runtime_error& err) {
    res.diverged = true;
    res.error = err.what();
  }

  std::optional<std::size_t> rules;
  if (pac) {
    res.events = pac->events();
    res.final_rules = pac->network().rules();
    rules = pac->network().rule_count();
  }
  res.metrics = compute_report(res.series, cfg.dt, cfg.metrics, rules);
  return res;
}

std::string summary_row(const ExperimentResult& r) {
  std::ostringstream os;
  os << r.plant << ',' << r.trajectory << ',' << r.controller << ',' << r.label << ','
     << optional_field(r.metrics.rmse) << ',' << optional_field(r.metrics.rise_time_ms) << ','
     << optional_field(r.metrics.settling_time_ms) << ',' << optional_field(r.metrics.peak) << ','
     << (r.metrics.final_rules ? std::to_string(*r.metrics.final_rules) : "NA") << ','
     << r.series.size() << ',' << (r.diverged ? "diverged" : "ok");
  return os.str();
}

void write_evolution_log(std::ostream& os, const ExperimentResult& r) {
  os << kEvolutionHeader << '\n';
  for (const auto& ev : r.events) {
    os << format_double(static_cast<double>(ev.step) * r.dt) << ','
       << (ev.kind == EvolutionEvent::Kind::Grow ? "GROW" : "PRUNE") << ',' << ev.rule_count
       << ',' << format_double(ev.bias) << ',' << format_double(ev.variance) << '\n';
  }
}

void write_rule_snapshot(std::ostream& os, const ExperimentResult& r) {
  if (r.final_rules.empty()) return;
  write_rule_snapshot(os, PalmNetwork(r.final_rules, PalmNetwork::kDefaultEta));
}

void write_experiment_files(const std::string& dir, const ExperimentResult& r) {
  std::filesystem::create_directories(dir);
  const std::string stem = (std::filesystem::path(dir) / (r.label + "_" + r.controller)).string();
  write_series(stem + "_steps.csv", r.series);
  if (r.controller != "pac") return;
  std::ofstream ev(stem + "_evolution.csv", std::ios::binary);
  std::ofstream rules(stem + "_rules.csv", std::ios::binary);
  if (!ev || !rules) throw std::runtime_error("cannot write outputs under " + dir);
  write_evolution_log(ev, r);
  write_rule_snapshot(rules, r);
}

void write_summary(const std::string& path, const std::vector<ExperimentResult>& results) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << kSummaryHeader << '\n';
  for (const auto& r : results) os << summary_row(r) << '\n';
}

}  // namespace pac
