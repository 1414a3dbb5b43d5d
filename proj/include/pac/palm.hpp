// Hyperplane-clustered Takagi-Sugeno network: each rule is a single weight
// vector over the extended input [1, e, e_dot, y_r]. The weight vector is both
// the rule's antecedent (a hyperplane the input is "close to") and its linear
// consequent, so a network with R rules owns exactly R * (N + 1) parameters.

#ifndef PAC_PALM_HPP
#define PAC_PALM_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace pac {

inline constexpr std::size_t kInputCount = 3;
inline constexpr std::size_t kExtendedSize = kInputCount + 1;

using Weights = std::array<double, kExtendedSize>;

/// Which signal occupies the last slot of the extended input.
enum class FourthInput { Reference, Output };

struct ExtendedInput {
  Weights values{1.0, 0.0, 0.0, 0.0};

  /// Builds [1, e, e_dot, last].
  static ExtendedInput make(double e, double e_dot, double last) {
    return ExtendedInput{{1.0, e, e_dot, last}};
  }
};

struct HyperplaneRule {
  Weights weights{};
};

struct FiringVector {
  std::vector<double> raw;
  std::vector<double> normalized;
};

class PalmNetwork {
 public:
  static constexpr double kDefaultEta = 5.0;
  static constexpr double kMinEta = 1.0;
  static constexpr double kMaxEta = 100.0;

  explicit PalmNetwork(double eta = kDefaultEta);
  PalmNetwork(std::vector<HyperplaneRule> rules, double eta);

  double eta() const { return eta_; }
  std::size_t rule_count() const { return rules_.size(); }
  std::size_t parameter_count() const { return rules_.size() * kExtendedSize; }

  const std::vector<HyperplaneRule>& rules() const { return rules_; }
  std::vector<HyperplaneRule>& rules() { return rules_; }

  void add_rule(const HyperplaneRule& rule) { rules_.push_back(rule); }
  void remove_rule(std::size_t index);

 private:
  std::vector<HyperplaneRule> rules_;
  double eta_;
};

/// |target - (a . x + b0)| / sqrt(1 + |a|^2), with a = weights[1..N], b0 = weights[0].
double point_to_plane_distance(const ExtendedInput& input, const HyperplaneRule& rule,
                               double target);

/// exp(-eta * d / d_max); 1 when every rule passes through the point (d_max == 0).
double membership(double distance, double max_distance, double eta);

/// Hyperplane output dot(x_e, w).
double rule_consequent(const ExtendedInput& input, const HyperplaneRule& rule);

struct PalmOutput {
  double value = 0.0;
  FiringVector firing;
};

/// Normalized-firing weighted sum of rule consequents.
PalmOutput network_output(const ExtendedInput& input, const PalmNetwork& net, double target);

/// Rows `rule_index, w0, ..., wN` at 17 significant digits.
void write_rule_snapshot(std::ostream& os, const PalmNetwork& net);

}  // namespace pac

#endif  // PAC_PALM_HPP
