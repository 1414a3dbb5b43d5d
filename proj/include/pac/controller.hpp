// Parsimonious controller: u = u_src - u_palm, where u_src is the saturated
// sliding-surface term and u_palm the output of an evolving hyperplane
// network whose weights follow w_dot = -gamma (e^T P b) psi.

#ifndef PAC_CONTROLLER_HPP
#define PAC_CONTROLLER_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "pac/control_loop.hpp"
#include "pac/evolution.hpp"
#include "pac/palm.hpp"

namespace pac {

using Triple = std::array<double, 3>;

struct SlidingState {
  Triple alpha{1e-2, 1e-3, 1e-9};
  Triple alpha_initial{1e-2, 1e-3, 1e-9};
  Triple alpha_max{1e-2, 1e-3, 1e-9};
  Triple learn_rates{0.0, 0.0, 0.0};
  double err_integral = 0.0;
  double gamma = 1.0;
  double sat_limit = 10.0;

  double gamma1() const { return alpha[1] / alpha[0]; }
  double gamma2() const { return alpha[2] / alpha[0]; }
};

struct PMatrix {
  double p11 = 0.0;
  double p12 = 0.0;
  double p21 = 0.0;
  double p22 = 0.0;

  bool symmetric() const { return p12 == p21; }
  bool positive_definite() const { return p11 > 0.0 && p11 * p22 - p12 * p21 > 0.0; }
};

/// Closed-form P used by the adaptation law (Q = I).
PMatrix p_matrix(double alpha1, double alpha2);

/// Exact solution of A^T P + P A = -I for A = [[0, 1], [-alpha1, -alpha2]].
/// Shares p12 and p22 with p_matrix(); only p11 differs.
PMatrix lyapunov_solution(double alpha1, double alpha2);

/// Residual max-abs entry of A^T P + P A + I.
double lyapunov_residual(const PMatrix& p, double alpha1, double alpha2);

struct ControlStep {
  double e = 0.0;
  double e_dot = 0.0;
  double s_l = 0.0;
  double u_src = 0.0;
  double u_palm = 0.0;
  double u = 0.0;        // u_src - u_palm, unsaturated
  double command = 0.0;  // u clamped to the actuator bound
  FiringVector firing;
  std::size_t rule_count = 0;
  double bias = 0.0;
  double variance = 0.0;
  bool grew = false;
  bool pruned = false;
};

/// e + gamma1 e_dot + gamma2 integral(e)
double sliding_value(double e, double e_dot, double err_integral, const SlidingState& s);

/// clamp(alpha1 s_l, -sat_limit, sat_limit)
double robustifying_term(double s_l, const SlidingState& s);

/// One explicit-Euler step of the weight law with psi_j = lambda_j x_e,
/// entries then clipped to [-weight_bound, weight_bound].
/// Throws ControllerFault on a non-finite update.
void adapt_weights(PalmNetwork& net, const ControlStep& step, double gamma, const PMatrix& p,
                   const ExtendedInput& input, double dt, double weight_bound);

/// alpha_i += dt rho_i |s_l| |signal_i| with signals (e, e_dot, integral(e)),
/// each clamped to [alpha_initial_i, alpha_max_i].
SlidingState adapt_sliding_params(SlidingState s, double e, double e_dot, double dt);

struct PacConfig {
  double eta = PalmNetwork::kDefaultEta;
  double gamma = 3.0;
  Triple alpha_initial{1e-2, 1e-3, 1e-9};
  Triple learn_rates{5.0, 5.0, 0.0};
  Triple alpha_max{4.0, 4.0, 1e-9};
  double sat_limit = 10.0;
  double weight_bound = 10.0;  // M_w
  double output_limit = 10.0;  // M_u
  bool evolve = true;
  FourthInput fourth_input = FourthInput::Reference;
  ConfidenceSignal confidence_signal = ConfidenceSignal::Normalized;
  GrowTarget grow_target = GrowTarget::Output;
  std::vector<HyperplaneRule> initial_rules{HyperplaneRule{}};
};

struct EvolutionEvent {
  enum class Kind { Grow, Prune };
  std::size_t step = 0;
  Kind kind = Kind::Grow;
  std::size_t rule_count = 0;
  double bias = 0.0;
  double variance = 0.0;
};

class PacController final : public Controller {
 public:
  explicit PacController(const PacConfig& cfg = {});

  double step(double y, double y_r, double dt) override;
  StepRecord last_record() const override;
  std::string name() const override { return "pac"; }

  /// Full diagnostics of the most recent step.
  const ControlStep& last_step() const { return last_; }
  const PalmNetwork& network() const { return net_; }
  const EvolutionState& evolution() const { return evo_; }
  const SlidingState& sliding() const { return sliding_; }
  const PMatrix& p() const { return p_; }
  const PacConfig& config() const { return cfg_; }
  const std::vector<EvolutionEvent>& events() const { return events_; }
  std::size_t steps_taken() const { return steps_; }

 private:
  PacConfig cfg_;
  PalmNetwork net_;
  EvolutionState evo_;
  SlidingState sliding_;
  PMatrix p_;
  ControlStep last_;
  std::vector<EvolutionEvent> events_;
  double e_prev_ = 0.0;
  std::size_t steps_ = 0;
};

}  // namespace pac

#endif  // PAC_CONTROLLER_HPP
