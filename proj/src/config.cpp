#include "pac/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pac {

using json = nlohmann::json;

PlantKind parse_plant(const std::string& name) {
  if (name == "hexacopter") return PlantKind::Hexacopter;
  if (name == "bifwmav") return PlantKind::FlappingMav;
  throw std::invalid_argument("unknown plant '" + name + "'");
}

std::string to_string(PlantKind k) {
  return k == PlantKind::Hexacopter ? "hexacopter" : "bifwmav";
}

std::size_t ExperimentConfig::step_count() const {
  return static_cast<std::size_t>(std::llround(duration / dt));
}

double ExperimentConfig::command_limit() const {
  return plant == PlantKind::Hexacopter ? hexacopter.command_limit : bifwmav.command_limit;
}

std::string ExperimentConfig::label() const {
  if (!name.empty()) return name;
  std::string s = to_string(plant) + "_" + trajectory_name(trajectory);
  if (channel != Channel::Altitude) s += "_" + to_string(channel);
  return s;
}

void ExperimentConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(duration >= 0.0)) throw std::invalid_argument("duration must be non-negative");
  const double steps = duration / dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    throw std::invalid_argument("duration must be an integer number of steps");
  }
  if (controllers.empty()) throw std::invalid_argument("no controllers listed");
  for (const auto& c : controllers) {
    if (c != "pac" && c != "pid") throw std::invalid_argument("unknown controller '" + c + "'");
  }
  if (plant == PlantKind::FlappingMav && channel != Channel::Altitude) {
    throw std::invalid_argument("the flapping-wing plant only supports the altitude channel");
  }
  pac::validate(trajectory);
  if (gust) gust->validate();
  if (impulse) impulse->validate();
  hexacopter.validate();
  bifwmav.validate();
}

PidGains default_pid_gains(PlantKind plant, Channel channel) {
  if (channel != Channel::Altitude) return {25.0, 5.0, 6.0};
  return {4.0, 0.5, 4.0};
}

namespace {

// Reads keys from one JSON object and rejects keys nobody asked for.
class Fields {
 public:
  Fields(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw std::invalid_argument(where_ + ": expected an object");
  }

  template <class T>
  bool get(const char* key, T& out) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) return false;
    try {
      out = it->get<T>();
    } catch (const json::exception& e) {
      throw std::invalid_argument(where_ + "." + key + ": " + e.what());
    }
    return true;
  }

  const json* child(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  std::string path(const char* key) const { return where_ + "." + key; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw std::invalid_argument(where_ + ": unknown key '" + it.key() + "'");
      }
    }
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

TrajectorySpec parse_trajectory(const json& j) {
  Fields f(j, "trajectory");
  std::string type;
  if (!f.get("type", type)) throw std::invalid_argument("trajectory.type is required");
  TrajectorySpec spec;
  if (type == "constant") {
    Constant s;
    f.get("height", s.height);
    spec = s;
  } else if (type == "sharp_steps") {
    SharpSteps s;
    f.get("levels", s.levels);
    f.get("dwell", s.dwell);
    spec = s;
  } else if (type == "smooth_steps") {
    SmoothSteps s;
    f.get("levels", s.levels);
    f.get("dwell", s.dwell);
    f.get("ramp", s.ramp);
    spec = s;
  } else if (type == "sum_of_sines") {
    SumOfSines s;
    if (const json* waves = f.child("waves")) {
      if (!waves->is_array()) throw std::invalid_argument("trajectory.waves must be an array");
      s.waves.clear();
      for (const auto& wj : *waves) {
        Fields wf(wj, "trajectory.waves[]");
        Wave w;
        std::string shape = "sine";
        wf.get("shape", shape);
        if (shape == "sine") {
          w.shape = Wave::Shape::Sine;
        } else if (shape == "cosine") {
          w.shape = Wave::Shape::Cosine;
        } else {
          throw std::invalid_argument("unknown wave shape '" + shape + "'");
        }
        wf.get("amplitude", w.amplitude);
        wf.get("frequency", w.frequency);
        wf.get("bias", w.bias);
        wf.finish();
        s.waves.push_back(w);
      }
    }
    spec = s;
  } else if (type == "square_wave") {
    SquareWave s;
    f.get("low", s.low);
    f.get("high", s.high);
    f.get("frequency", s.frequency);
    spec = s;
  } else if (type == "staircase") {
    Staircase s;
    f.get("heights", s.heights);
    f.get("dwell", s.dwell);
    f.get("base", s.base);
    spec = s;
  } else if (type == "step") {
    Step s;
    f.get("amplitude", s.amplitude);
    f.get("start", s.start);
    spec = s;
  } else if (type == "attitude_sines") {
    AttitudeSumOfSines s;
    f.get("sine_amplitude", s.sine_amplitude);
    f.get("sine_frequency", s.sine_frequency);
    f.get("cosine_amplitude", s.cosine_amplitude);
    f.get("cosine_frequency", s.cosine_frequency);
    spec = s;
  } else {
    throw std::invalid_argument("unknown trajectory type '" + type + "'");
  }
  f.finish();
  return spec;
}

json trajectory_json(const TrajectorySpec& spec) {
  json j;
  j["type"] = trajectory_name(spec);
  if (auto* s = std::get_if<Constant>(&spec)) {
    j["height"] = s->height;
  } else if (auto* s = std::get_if<SharpSteps>(&spec)) {
    j["levels"] = s->levels;
    j["dwell"] = s->dwell;
  } else if (auto* s = std::get_if<SmoothSteps>(&spec)) {
    j["levels"] = s->levels;
    j["dwell"] = s->dwell;
    j["ramp"] = s->ramp;
  } else if (auto* s = std::get_if<SumOfSines>(&spec)) {
    j["waves"] = json::array();
    for (const auto& w : s->waves) {
      j["waves"].push_back({{"shape", w.shape == Wave::Shape::Sine ? "sine" : "cosine"},
                            {"amplitude", w.amplitude},
                            {"frequency", w.frequency},
                            {"bias", w.bias}});
    }
  } else if (auto* s = std::get_if<SquareWave>(&spec)) {
    j["low"] = s->low;
    j["high"] = s->high;
    j["frequency"] = s->frequency;
  } else if (auto* s = std::get_if<Staircase>(&spec)) {
    j["heights"] = s->heights;
    j["dwell"] = s->dwell;
    j["base"] = s->base;
  } else if (auto* s = std::get_if<Step>(&spec)) {
    j["amplitude"] = s->amplitude;
    j["start"] = s->start;
  } else if (auto* s = std::get_if<AttitudeSumOfSines>(&spec)) {
    j["sine_amplitude"] = s->sine_amplitude;
    j["sine_frequency"] = s->sine_frequency;
    j["cosine_amplitude"] = s->cosine_amplitude;
    j["cosine_frequency"] = s->cosine_frequency;
  }
  return j;
}

void parse_pac(const json& j, PacConfig& p) {
  Fields f(j, "pac");
  f.get("eta", p.eta);
  f.get("gamma", p.gamma);
  f.get("alpha_initial", p.alpha_initial);
  f.get("learn_rates", p.learn_rates);
  f.get("alpha_max", p.alpha_max);
  f.get("sat_limit", p.sat_limit);
  f.get("weight_bound", p.weight_bound);
  f.get("output_limit", p.output_limit);
  f.get("evolve", p.evolve);
  std::string s;
  if (f.get("fourth_input", s)) {
    if (s == "reference") {
      p.fourth_input = FourthInput::Reference;
    } else if (s == "output") {
      p.fourth_input = FourthInput::Output;
    } else {
      throw std::invalid_argument("pac.fourth_input must be 'reference' or 'output'");
    }
  }
  if (f.get("confidence_signal", s)) {
    if (s == "normalized") {
      p.confidence_signal = ConfidenceSignal::Normalized;
    } else if (s == "raw") {
      p.confidence_signal = ConfidenceSignal::Raw;
    } else {
      throw std::invalid_argument("pac.confidence_signal must be 'normalized' or 'raw'");
    }
  }
  if (f.get("grow_target", s)) {
    if (s == "reference") {
      p.grow_target = GrowTarget::Reference;
    } else if (s == "output") {
      p.grow_target = GrowTarget::Output;
    } else {
      throw std::invalid_argument("pac.grow_target must be 'reference' or 'output'");
    }
  }
  std::vector<Weights> rules;
  if (f.get("initial_rules", rules)) {
    p.initial_rules.clear();
    for (const auto& w : rules) p.initial_rules.push_back(HyperplaneRule{w});
  }
  f.finish();
}

json pac_json(const PacConfig& p) {
  std::vector<Weights> rules;
  for (const auto& r : p.initial_rules) rules.push_back(r.weights);
  return {{"eta", p.eta},
          {"gamma", p.gamma},
          {"alpha_initial", p.alpha_initial},
          {"learn_rates", p.learn_rates},
          {"alpha_max", p.alpha_max},
          {"sat_limit", p.sat_limit},
          {"weight_bound", p.weight_bound},
          {"output_limit", p.output_limit},
          {"evolve", p.evolve},
          {"fourth_input", p.fourth_input == FourthInput::Reference ? "reference" : "output"},
          {"confidence_signal",
           p.confidence_signal == ConfidenceSignal::Normalized ? "normalized" : "raw"},
          {"grow_target", p.grow_target == GrowTarget::Reference ? "reference" : "output"},
          {"initial_rules", rules}};
}

void parse_inertia(const json& j, InertiaSet& in, const std::string& where) {
  Fields f(j, where);
  f.get("mass", in.mass);
  f.get("ix", in.ix);
  f.get("iy", in.iy);
  f.get("iz", in.iz);
  f.get("ixz", in.ixz);
  f.finish();
}

json inertia_json(const InertiaSet& in) {
  return {{"mass", in.mass}, {"ix", in.ix}, {"iy", in.iy}, {"iz", in.iz}, {"ixz", in.ixz}};
}

void parse_gains(const json& j, AttitudeGains& g, const std::string& where) {
  Fields f(j, where);
  f.get("kp", g.kp);
  f.get("kd", g.kd);
  f.finish();
}

void parse_hexacopter(const json& j, HexacopterParams& p) {
  Fields f(j, "hexacopter");
  if (const json* c = f.child("inertia")) parse_inertia(*c, p.inertia, "hexacopter.inertia");
  f.get("arm_length", p.arm_length);
  f.get("k_thrust", p.k_thrust);
  f.get("k_torque", p.k_torque);
  f.get("max_rotor_speed", p.max_rotor_speed);
  f.get("linear_drag", p.linear_drag);
  f.get("drag_center_height", p.drag_center_height);
  f.get("command_limit", p.command_limit);
  if (const json* c = f.child("attitude")) parse_gains(*c, p.attitude, "hexacopter.attitude");
  f.get("rate_damping", p.rate_damping);
  if (const json* c = f.child("altitude_hold")) {
    parse_gains(*c, p.altitude_hold, "hexacopter.altitude_hold");
  }
  f.get("cg_x_command", p.cg_x_command);
  f.get("cg_y_command", p.cg_y_command);
  f.finish();
}

json hexacopter_json(const HexacopterParams& p) {
  return {{"inertia", inertia_json(p.inertia)},
          {"arm_length", p.arm_length},
          {"k_thrust", p.k_thrust},
          {"k_torque", p.k_torque},
          {"max_rotor_speed", p.max_rotor_speed},
          {"linear_drag", p.linear_drag},
          {"drag_center_height", p.drag_center_height},
          {"command_limit", p.command_limit},
          {"attitude", {{"kp", p.attitude.kp}, {"kd", p.attitude.kd}}},
          {"rate_damping", p.rate_damping},
          {"altitude_hold", {{"kp", p.altitude_hold.kp}, {"kd", p.altitude_hold.kd}}},
          {"cg_x_command", p.cg_x_command},
          {"cg_y_command", p.cg_y_command}};
}

void parse_bifwmav(const json& j, FlappingMavParams& p) {
  Fields f(j, "bifwmav");
  if (const json* c = f.child("inertia")) parse_inertia(*c, p.inertia, "bifwmav.inertia");
  f.get("max_amplitude", p.max_amplitude);
  f.get("flap_frequency", p.geometry.ff);
  f.get("linear_drag", p.linear_drag);
  f.get("drag_center_height", p.drag_center_height);
  f.get("command_limit", p.command_limit);
  if (const json* c = f.child("attitude")) parse_gains(*c, p.attitude, "bifwmav.attitude");
  f.finish();
}

json bifwmav_json(const FlappingMavParams& p) {
  return {{"inertia", inertia_json(p.inertia)},
          {"max_amplitude", p.max_amplitude},
          {"flap_frequency", p.geometry.ff},
          {"linear_drag", p.linear_drag},
          {"drag_center_height", p.drag_center_height},
          {"command_limit", p.command_limit},
          {"attitude", {{"kp", p.attitude.kp}, {"kd", p.attitude.kd}}}};
}

ExperimentConfig from_json(const json& j) {
  ExperimentConfig cfg;
  Fields f(j, "experiment");
  f.get("name", cfg.name);
  std::string s;
  if (f.get("plant", s)) cfg.plant = parse_plant(s);
  if (f.get("channel", s)) cfg.channel = parse_channel(s);
  if (cfg.channel == Channel::Pitch) cfg.trajectory = AttitudeSumOfSines{};
  if (cfg.channel == Channel::Roll) cfg.trajectory = AttitudeSumOfSines{0.3, 0.3, 0.4, 0.5};
  f.get("controllers", cfg.controllers);
  if (const json* c = f.child("trajectory")) cfg.trajectory = parse_trajectory(*c);
  f.get("duration", cfg.duration);
  f.get("dt", cfg.dt);
  f.get("initial_altitude", cfg.initial_altitude);

  if (const json* c = f.child("gust"); c && !c->is_null()) {
    GustSpec g;
    Fields gf(*c, "gust");
    gf.get("amplitude", g.amplitude);
    gf.get("length", g.length);
    gf.get("onset_time", g.onset_time);
    gf.get("advection_speed", g.advection_speed);
    gf.finish();
    cfg.gust = g;
  }
  if (const json* c = f.child("impulse"); c && !c->is_null()) {
    ImpulseSpec im;
    Fields inf(*c, "impulse");
    inf.get("amplitude", im.amplitude);
    inf.get("start", im.start);
    inf.get("duration", im.duration);
    inf.finish();
    cfg.impulse = im;
  }
  if (const json* c = f.child("hexacopter")) parse_hexacopter(*c, cfg.hexacopter);
  if (const json* c = f.child("bifwmav")) parse_bifwmav(*c, cfg.bifwmav);

  // Controller output bounds follow the plant's actuator bound unless given.
  cfg.pac.output_limit = cfg.command_limit();
  if (const json* c = f.child("pac")) parse_pac(*c, cfg.pac);
  cfg.pid = default_pid_gains(cfg.plant, cfg.channel);
  if (const json* c = f.child("pid")) {
    Fields pf(*c, "pid");
    pf.get("kp", cfg.pid.kp);
    pf.get("ki", cfg.pid.ki);
    pf.get("kd", cfg.pid.kd);
    pf.finish();
  }
  if (const json* c = f.child("metrics")) {
    Fields mf(*c, "metrics");
    mf.get("rise_low", cfg.metrics.rise_low);
    mf.get("rise_high", cfg.metrics.rise_high);
    mf.get("settle_band", cfg.metrics.settle_band);
    mf.finish();
  }
  f.get("output_dir", cfg.output_dir);
  f.get("seed", cfg.seed);
  f.finish();
  cfg.validate();
  return cfg;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

ExperimentConfig parse_experiment(const std::string& json_text) {
  return from_json(parse_text(json_text));
}

std::vector<ExperimentConfig> parse_suite(const std::string& json_text) {
  const json root = parse_text(json_text);
  Fields f(root, "suite");
  json defaults = json::object();
  if (const json* d = f.child("defaults")) defaults = *d;
  const json* list = f.child("experiments");
  if (!list || !list->is_array()) throw std::invalid_argument("suite.experiments must be an array");
  f.finish();
  std::vector<ExperimentConfig> out;
  for (const auto& entry : *list) {
    json merged = defaults;
    merged.merge_patch(entry);
    out.push_back(from_json(merged));
  }
  return out;
}

ExperimentConfig load_experiment(const std::string& path) { return parse_experiment(read_file(path)); }

std::vector<ExperimentConfig> load_suite(const std::string& path) {
  return parse_suite(read_file(path));
}

std::string dump_experiment(const ExperimentConfig& cfg) {
  json j;
  j["name"] = cfg.name;
  j["plant"] = to_string(cfg.plant);
  j["channel"] = to_string(cfg.channel);
  j["controllers"] = cfg.controllers;
  j["trajectory"] = trajectory_json(cfg.trajectory);
  j["duration"] = cfg.duration;
  j["dt"] = cfg.dt;
  j["initial_altitude"] = cfg.initial_altitude;
  j["gust"] = nullptr;
  if (cfg.gust) {
    j["gust"] = {{"amplitude", cfg.gust->amplitude},
                 {"length", cfg.gust->length},
                 {"onset_time", cfg.gust->onset_time},
                 {"advection_speed", cfg.gust->advection_speed}};
  }
  j["impulse"] = nullptr;
  if (cfg.impulse) {
    j["impulse"] = {{"amplitude", cfg.impulse->amplitude},
                    {"start", cfg.impulse->start},
                    {"duration", cfg.impulse->duration}};
  }
  j["pac"] = pac_json(cfg.pac);
  j["pid"] = {{"kp", cfg.pid.kp}, {"ki", cfg.pid.ki}, {"kd", cfg.pid.kd}};
  j["hexacopter"] = hexacopter_json(cfg.hexacopter);
  j["bifwmav"] = bifwmav_json(cfg.bifwmav);
  j["metrics"] = {{"rise_low", cfg.metrics.rise_low},
                  {"rise_high", cfg.metrics.rise_high},
                  {"settle_band", cfg.metrics.settle_band}};
  j["output_dir"] = cfg.output_dir;
  j["seed"] = cfg.seed;
  return j.dump(2);
}

}  // namespace pac
