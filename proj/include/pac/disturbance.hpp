#ifndef PAC_DISTURBANCE_HPP
#define PAC_DISTURBANCE_HPP

namespace pac {

/// One-minus-cosine discrete gust.
struct GustSpec {
  double amplitude = 4.0;     // V_m, m/s
  double length = 120.0;      // d_m, m
  double onset_time = 2.0;    // s
  double advection_speed = 60.0;  // m/s the gust front sweeps past the vehicle

  void validate() const;
};

/// Wind speed after `distance` metres of gust penetration.
double gust_velocity(double distance, const GustSpec& spec);

/// Tracks gust penetration distance: from onset it advances at the advection
/// speed plus the vehicle's forward body speed.
class GustField {
 public:
  explicit GustField(const GustSpec& spec) : spec_(spec) { spec_.validate(); }

  /// Wind for the current step, then advances the penetration distance.
  double advance(double t, double forward_speed, double dt);
  double distance() const { return distance_; }

 private:
  GustSpec spec_;
  double distance_ = 0.0;
};

/// Additive measurement spike.
struct ImpulseSpec {
  double amplitude = 2.0;  // plant output units
  double start = 30.0;     // s
  double duration = 0.1;   // s

  void validate() const;
};

/// `amplitude` for t in [start, start + duration), else 0.
double impulse_noise(double t, const ImpulseSpec& spec);

}  // namespace pac

#endif  // PAC_DISTURBANCE_HPP
