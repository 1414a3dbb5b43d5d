#include "pac/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pac {

void SigmaMonitor::update(double sample) {
  ++count_;
  const double delta = sample - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (sample - mean_);
  const double sd = stddev();
  if (count_ == 1) {
    mean_min_ = mean_;
    std_min_ = sd;
  } else {
    mean_min_ = std::min(mean_min_, mean_);
    std_min_ = std::min(std_min_, sd);
  }
}

double SigmaMonitor::stddev() const {
  if (count_ == 0) return 0.0;
  return std::sqrt(std::max(m2_, 0.0) / static_cast<double>(count_));
}

bool SigmaMonitor::exceeds(double factor) const {
  if (count_ < 2) return false;
  return mean_ + stddev() > mean_min_ + factor * std_min_;
}

void SigmaMonitor::reset_minima() {
  mean_min_ = mean_;
  std_min_ = stddev();
}

void update_input_mean(EvolutionState& state, const ExtendedInput& input) {
  const double n = static_cast<double>(state.samples + 1);
  for (std::size_t i = 0; i < kExtendedSize; ++i) {
    state.input_mean[i] += (input.values[i] - state.input_mean[i]) / n;
  }
  ++state.samples;
}

BiasVariance network_bias_variance(const PalmNetwork& net, const EvolutionState& state,
                                   double target) {
  const auto& mu = state.input_mean;
  double ey = 0.0;
  double ey2 = 0.0;
  for (const auto& rule : net.rules()) {
    for (std::size_t i = 0; i < kExtendedSize; ++i) {
      ey += rule.weights[i] * mu[i];
      ey2 += rule.weights[i] * mu[i] * mu[i];
    }
  }
  const double bias = ey - target;
  return {bias * bias, std::max(ey2 - ey * ey, 0.0)};
}

double growth_confidence(double bias) { return 1.3 * std::exp(-bias * bias) + 0.7; }

double pruning_confidence(double variance) { return 1.3 * std::exp(-variance) + 0.7; }

namespace {

double confidence_input(ConfidenceSignal mode, double x) {
  return mode == ConfidenceSignal::Normalized ? x / (1.0 + x) : x;
}

}  // namespace

bool check_grow(EvolutionState& state, double bias) {
  state.bias.update(bias);
  const double factor = growth_confidence(confidence_input(state.confidence_signal, bias));
  if (!state.bias.exceeds(factor)) return false;
  state.bias.reset_minima();
  return true;
}

bool check_prune(EvolutionState& state, double variance, std::size_t rule_count) {
  state.variance.update(variance);
  if (rule_count < 2) return false;
  const double factor =
      2.0 * pruning_confidence(confidence_input(state.confidence_signal, variance));
  if (!state.variance.exceeds(factor)) return false;
  state.variance.reset_minima();
  return true;
}

bool grow_rule(PalmNetwork& net, const ExtendedInput& input, double target) {
  // Largest double below 1, so every entry stays strictly inside (-1, 1).
  constexpr double kLimit = 1.0 - std::numeric_limits<double>::epsilon();
  double norm_sq = 0.0;
  for (double x : input.values) norm_sq += x * x;

  HyperplaneRule rule;
  for (std::size_t i = 0; i < kExtendedSize; ++i) {
    rule.weights[i] = std::clamp(target * input.values[i] / norm_sq, -kLimit, kLimit);
  }
  for (const auto& existing : net.rules()) {
    if (existing.weights == rule.weights) return false;
  }
  net.add_rule(rule);
  return true;
}

std::size_t prune_rule(PalmNetwork& net, const EvolutionState& state) {
  std::size_t weakest = 0;
  double weakest_hs = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < net.rule_count(); ++j) {
    double hs = 0.0;
    for (std::size_t i = 0; i < kExtendedSize; ++i) {
      hs += net.rules()[j].weights[i] * state.input_mean[i];
    }
    if (std::abs(hs) < weakest_hs) {
      weakest_hs = std::abs(hs);
      weakest = j;
    }
  }
  net.remove_rule(weakest);
  return weakest;
}

}  // namespace pac
