#include "pac/palm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace pac {

namespace {

constexpr double kUnderflowFloor = 1e-300;

void check_eta(double eta) {
  if (!(eta >= PalmNetwork::kMinEta && eta <= PalmNetwork::kMaxEta)) {
    throw std::invalid_argument("eta must lie in [1, 100]");
  }
}

}  // namespace

PalmNetwork::PalmNetwork(double eta) : eta_(eta) { check_eta(eta); }

PalmNetwork::PalmNetwork(std::vector<HyperplaneRule> rules, double eta)
    : rules_(std::move(rules)), eta_(eta) {
  check_eta(eta);
}

void PalmNetwork::remove_rule(std::size_t index) {
  if (index >= rules_.size()) throw std::out_of_range("rule index");
  rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(index));
}

double point_to_plane_distance(const ExtendedInput& input, const HyperplaneRule& rule,
                               double target) {
  const auto& w = rule.weights;
  const auto& x = input.values;
  double plane = w[0];
  double slope_sq = 0.0;
  for (std::size_t i = 1; i < kExtendedSize; ++i) {
    plane += w[i] * x[i];
    slope_sq += w[i] * w[i];
  }
  return std::abs(target - plane) / std::sqrt(1.0 + slope_sq);
}

double membership(double distance, double max_distance, double eta) {
  if (max_distance <= 0.0) return 1.0;
  // ratio first: d <= d_max then gives a ratio <= 1 and a grade >= exp(-eta)
  return std::exp(-eta * (distance / max_distance));
}

double rule_consequent(const ExtendedInput& input, const HyperplaneRule& rule) {
  double acc = 0.0;
  for (std::size_t i = 0; i < kExtendedSize; ++i) acc += input.values[i] * rule.weights[i];
  return acc;
}

PalmOutput network_output(const ExtendedInput& input, const PalmNetwork& net, double target) {
  const auto& rules = net.rules();
  const std::size_t r = rules.size();
  if (r == 0) throw std::logic_error("network_output on an empty rule base");

  PalmOutput out;
  out.firing.raw.resize(r);
  out.firing.normalized.resize(r);

  std::vector<double> distance(r);
  double d_max = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    distance[j] = point_to_plane_distance(input, rules[j], target);
    d_max = std::max(d_max, distance[j]);
  }

  double total = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    out.firing.raw[j] = membership(distance[j], d_max, net.eta());
    total += out.firing.raw[j];
  }

  for (std::size_t j = 0; j < r; ++j) {
    out.firing.normalized[j] =
        total < kUnderflowFloor ? 1.0 / static_cast<double>(r) : out.firing.raw[j] / total;
    out.value += out.firing.normalized[j] * rule_consequent(input, rules[j]);
  }
  return out;
}

void write_rule_snapshot(std::ostream& os, const PalmNetwork& net) {
  char buf[32];
  for (std::size_t j = 0; j < net.rule_count(); ++j) {
    os << j;
    for (double w : net.rules()[j].weights) {
      std::snprintf(buf, sizeof buf, "%.17g", w);
      os << ", " << buf;
    }
    os << '\n';
  }
}

}  // namespace pac
