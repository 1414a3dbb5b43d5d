#include "pac/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pac {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t segment(double t, double dwell, std::size_t count) {
  if (t <= 0.0) return 0;
  const auto k = static_cast<std::size_t>(std::floor(t / dwell));
  return std::min(k, count - 1);
}

double smoothstep(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return x * x * (3.0 - 2.0 * x);
}

double eval(const Constant& c, double) { return c.height; }

double eval(const SharpSteps& s, double t) { return s.levels[segment(t, s.dwell, s.levels.size())]; }

double eval(const SmoothSteps& s, double t) {
  const std::size_t k = segment(t, s.dwell, s.levels.size());
  if (k == 0) return s.levels[0];
  const double since = t - static_cast<double>(k) * s.dwell;
  const double from = s.levels[k - 1];
  const double to = s.levels[k];
  return from + (to - from) * smoothstep(since / s.ramp);
}

double eval(const SumOfSines& s, double t) {
  double y = 0.0;
  for (const auto& w : s.waves) {
    const double phase = w.frequency * t;
    y += w.amplitude * (w.shape == Wave::Shape::Sine ? std::sin(phase) : std::cos(phase)) + w.bias;
  }
  return y;
}

double eval(const SquareWave& s, double t) {
  const double period = 2.0 * std::numbers::pi / s.frequency;
  double phase = std::fmod(t, period);
  if (phase < 0.0) phase += period;
  return phase < 0.5 * period ? s.high : s.low;
}

double eval(const Staircase& s, double t) {
  double y = s.base;
  for (std::size_t i = 0; i < s.heights.size(); ++i) {
    if (t >= static_cast<double>(i) * s.dwell) y += s.heights[i];
  }
  return y;
}

double eval(const Step& s, double t) { return t >= s.start ? s.amplitude : 0.0; }

double eval(const AttitudeSumOfSines& s, double t) {
  return s.sine_amplitude * std::sin(s.sine_frequency * t) +
         s.cosine_amplitude * std::cos(s.cosine_frequency * t);
}

}  // namespace

double reference(const TrajectorySpec& spec, double t) {
  return std::visit([t](const auto& s) { return eval(s, t); }, spec);
}

std::string trajectory_name(const TrajectorySpec& spec) {
  return std::visit(Overloaded{
                        [](const Constant&) { return std::string("constant"); },
                        [](const SharpSteps&) { return std::string("sharp_steps"); },
                        [](const SmoothSteps&) { return std::string("smooth_steps"); },
                        [](const SumOfSines&) { return std::string("sum_of_sines"); },
                        [](const SquareWave&) { return std::string("square_wave"); },
                        [](const Staircase&) { return std::string("staircase"); },
                        [](const Step&) { return std::string("step"); },
                        [](const AttitudeSumOfSines&) { return std::string("attitude_sines"); },
                    },
                    spec);
}

void validate(const TrajectorySpec& spec) {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  std::visit(Overloaded{
                 [](const Constant&) {},
                 [&](const SharpSteps& s) {
                   if (s.levels.empty()) fail("sharp steps need at least one level");
                   if (!(s.dwell > 0.0)) fail("dwell must be positive");
                 },
                 [&](const SmoothSteps& s) {
                   if (s.levels.empty()) fail("smooth steps need at least one level");
                   if (!(s.dwell > 0.0) || !(s.ramp > 0.0)) fail("dwell and ramp must be positive");
                 },
                 [&](const SumOfSines& s) {
                   if (s.waves.empty()) fail("sum of sines needs at least one wave");
                 },
                 [&](const SquareWave& s) {
                   if (!(s.frequency > 0.0)) fail("square wave frequency must be positive");
                 },
                 [&](const Staircase& s) {
                   if (s.heights.empty()) fail("staircase needs at least one step");
                   if (!(s.dwell > 0.0)) fail("dwell must be positive");
                 },
                 [](const Step&) {},
                 [](const AttitudeSumOfSines&) {},
             },
             spec);
}

}  // namespace pac
