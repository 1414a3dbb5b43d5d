// Structure learning driven by the network-significance decomposition
// NS = Var + Bias^2, evaluated one sample at a time.
//
// A rule is added when the running mean + std of the bias signal climbs above
// its recorded minimum by a dynamic confidence margin, and the least
// significant rule is removed when the variance signal does the same with a
// doubled margin. No sample history is stored.

#ifndef PAC_EVOLUTION_HPP
#define PAC_EVOLUTION_HPP

#include <cstddef>

#include "pac/palm.hpp"

namespace pac {

/// Welford running mean / population std of a scalar stream, plus the
/// minima of both since the last reset.
class SigmaMonitor {
 public:
  void update(double sample);

  /// mean + std > mean_min + factor * std_min, only once two samples exist.
  bool exceeds(double factor) const;

  void reset_minima();

  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  double stddev() const;
  double mean_min() const { return mean_min_; }
  double std_min() const { return std_min_; }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double mean_min_ = 0.0;
  double std_min_ = 0.0;
};

/// How the raw bias / variance value is mapped before it enters the
/// confidence factor. `Raw` feeds it as is; `Normalized` feeds x / (1 + x),
/// which keeps the factor inside [1.18, 2].
enum class ConfidenceSignal { Raw, Normalized };

/// Value a newly grown rule reproduces at the current input. `Reference`
/// fits y_r; `Output` fits the network's present output, so growth does not
/// step the control signal.
enum class GrowTarget { Reference, Output };

struct EvolutionState {
  Weights input_mean{};  // running mean of the extended input
  std::size_t samples = 0;
  SigmaMonitor bias;
  SigmaMonitor variance;
  std::size_t grow_count = 0;
  std::size_t prune_count = 0;
  ConfidenceSignal confidence_signal = ConfidenceSignal::Normalized;
};

/// Incremental mean over extended inputs.
void update_input_mean(EvolutionState& state, const ExtendedInput& input);

struct BiasVariance {
  double bias2 = 0.0;
  double variance = 0.0;
};

/// Expected output under unit firing strength: E[Y] = sum_j w_j . mu_e and
/// E[Y^2] = sum_j w_j . (mu_e o mu_e). Variance is clamped at zero.
BiasVariance network_bias_variance(const PalmNetwork& net, const EvolutionState& state,
                                   double target);

/// 1.3 exp(-bias^2) + 0.7
double growth_confidence(double bias);
/// 1.3 exp(-var) + 0.7
double pruning_confidence(double variance);

/// Feeds `bias` into the bias monitor and tests the growing condition;
/// resets the bias minima when it fires.
bool check_grow(EvolutionState& state, double bias);

/// Feeds `variance` into the variance monitor and tests the pruning condition
/// with the doubled confidence margin. Never fires for a single-rule network.
bool check_prune(EvolutionState& state, double variance, std::size_t rule_count);

/// Appends the minimum-norm rule through (x_e, target), entries clipped to
/// (-1, 1). Returns false, leaving the network unchanged, when an identical
/// rule already exists.
bool grow_rule(PalmNetwork& net, const ExtendedInput& input, double target);

/// Removes the rule with the smallest |w_i . mu_e| (lowest index on ties) and
/// returns its index.
std::size_t prune_rule(PalmNetwork& net, const EvolutionState& state);

}  // namespace pac

#endif  // PAC_EVOLUTION_HPP
