// Reference signals. Every variant is a pure function of time.

#ifndef PAC_TRAJECTORY_HPP
#define PAC_TRAJECTORY_HPP

#include <string>
#include <variant>
#include <vector>

namespace pac {

struct Constant {
  double height = 4.0;
};

/// Holds levels[k] on [k dwell, (k+1) dwell); the last level is held forever.
struct SharpSteps {
  std::vector<double> levels{3.0, 6.0, 9.0, 6.0, 3.0};
  double dwell = 20.0;
};

/// Same schedule as SharpSteps, but each transition is a cubic smoothstep
/// lasting `ramp` seconds that starts at the boundary.
struct SmoothSteps {
  std::vector<double> levels{3.0, 6.0, 9.0, 6.0, 3.0};
  double dwell = 20.0;
  double ramp = 3.0;
};

struct Wave {
  enum class Shape { Sine, Cosine };
  Shape shape = Shape::Sine;
  double amplitude = 0.0;
  double frequency = 0.0;  // rad/s
  double bias = 0.0;
};

struct SumOfSines {
  std::vector<Wave> waves{{Wave::Shape::Sine, 4.0, 0.3, 6.0}, {Wave::Shape::Cosine, 3.0, 0.5, 3.0}};
};

/// `high` during the first half of every period 2 pi / frequency, `low` in the
/// second half (the sign of sin(frequency t)).
struct SquareWave {
  double low = 1.0;
  double high = 11.0;
  double frequency = 0.2;
};

/// base + sum of heights[i] for every i with t >= i dwell.
struct Staircase {
  std::vector<double> heights{3.0, 3.0, 3.0, 2.0};
  double dwell = 20.0;
  double base = 1.0;
};

/// amplitude u(t - start)
struct Step {
  double amplitude = 3.0;
  double start = 3.0;
};

/// sine_amp sin(sine_freq t) + cos_amp cos(cos_freq t), radians.
struct AttitudeSumOfSines {
  double sine_amplitude = 0.3;
  double sine_frequency = 0.3;
  double cosine_amplitude = 0.5;
  double cosine_frequency = 0.5;
};

using TrajectorySpec = std::variant<Constant, SharpSteps, SmoothSteps, SumOfSines, SquareWave,
                                    Staircase, Step, AttitudeSumOfSines>;

double reference(const TrajectorySpec& spec, double t);

/// Short identifier used in file names and summary rows.
std::string trajectory_name(const TrajectorySpec& spec);

/// Throws std::invalid_argument for empty level lists or non-positive
/// durations and frequencies.
void validate(const TrajectorySpec& spec);

}  // namespace pac

#endif  // PAC_TRAJECTORY_HPP
