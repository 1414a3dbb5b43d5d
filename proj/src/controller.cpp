#include "pac/controller.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pac {

namespace {

constexpr double kBiasResolution = 1e-12;

void require_positive_alphas(double alpha1, double alpha2) {
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0)) {
    throw std::invalid_argument("sliding coefficients alpha1, alpha2 must be positive");
  }
}

bool all_finite(const PalmNetwork& net) {
  for (const auto& rule : net.rules()) {
    for (double w : rule.weights) {
      if (!std::isfinite(w)) return false;
    }
  }
  return true;
}

}  // namespace

PMatrix p_matrix(double alpha1, double alpha2) {
  require_positive_alphas(alpha1, alpha2);
  const double off = 1.0 / (2.0 * alpha1);
  return {alpha2 / alpha1 + 1.0 / (2.0 * alpha2), off, off,
          (1.0 + alpha1) / (2.0 * alpha1 * alpha2)};
}

PMatrix lyapunov_solution(double alpha1, double alpha2) {
  require_positive_alphas(alpha1, alpha2);
  const double off = 1.0 / (2.0 * alpha1);
  const double p22 = (1.0 + alpha1) / (2.0 * alpha1 * alpha2);
  return {alpha1 * p22 + alpha2 * off, off, off, p22};
}

double lyapunov_residual(const PMatrix& p, double alpha1, double alpha2) {
  // A = [[0, 1], [-a1, -a2]]; residual R = A^T P + P A + I.
  const double a[2][2] = {{0.0, 1.0}, {-alpha1, -alpha2}};
  const double pm[2][2] = {{p.p11, p.p12}, {p.p21, p.p22}};
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double r = (i == j) ? 1.0 : 0.0;
      for (int k = 0; k < 2; ++k) r += a[k][i] * pm[k][j] + pm[i][k] * a[k][j];
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

double sliding_value(double e, double e_dot, double err_integral, const SlidingState& s) {
  return e + s.gamma1() * e_dot + s.gamma2() * err_integral;
}

double robustifying_term(double s_l, const SlidingState& s) {
  return std::clamp(s.alpha[0] * s_l, -s.sat_limit, s.sat_limit);
}

void adapt_weights(PalmNetwork& net, const ControlStep& step, double gamma, const PMatrix& p,
                   const ExtendedInput& input, double dt, double weight_bound) {
  if (step.firing.normalized.size() != net.rule_count()) {
    throw std::logic_error("firing vector does not match the rule base");
  }
  // e^T P b with b = [0, 1]^T
  const double g = step.e * p.p12 + step.e_dot * p.p22;
  auto& rules = net.rules();
  for (std::size_t j = 0; j < rules.size(); ++j) {
    const double scale = dt * gamma * g * step.firing.normalized[j];
    for (std::size_t i = 0; i < kExtendedSize; ++i) {
      double w = rules[j].weights[i] - scale * input.values[i];
      if (!std::isfinite(w)) {
        throw ControllerFault(0, "non-finite weight update in rule " + std::to_string(j));
      }
      rules[j].weights[i] = std::clamp(w, -weight_bound, weight_bound);
    }
  }
}

SlidingState adapt_sliding_params(SlidingState s, double e, double e_dot, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const double s_l = std::abs(sliding_value(e, e_dot, s.err_integral, s));
  const Triple signal{std::abs(e), std::abs(e_dot), std::abs(s.err_integral)};
  for (std::size_t i = 0; i < 3; ++i) {
    const double next = s.alpha[i] + dt * s.learn_rates[i] * s_l * signal[i];
    s.alpha[i] = std::clamp(next, s.alpha_initial[i], std::max(s.alpha_initial[i], s.alpha_max[i]));
  }
  return s;
}

PacController::PacController(const PacConfig& cfg)
    : cfg_(cfg), net_(cfg.initial_rules, cfg.eta) {
  if (net_.rule_count() == 0) throw std::invalid_argument("PAC needs at least one initial rule");
  for (const auto& rule : net_.rules()) {
    for (double w : rule.weights) {
      if (!(std::abs(w) < 1.0)) throw std::invalid_argument("initial weights must satisfy |w| < 1");
    }
  }
  if (!(cfg.gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(cfg.sat_limit > 0.0) || !(cfg.weight_bound > 0.0) || !(cfg.output_limit > 0.0)) {
    throw std::invalid_argument("saturation bounds must be positive");
  }
  evo_.confidence_signal = cfg.confidence_signal;
  sliding_.alpha = cfg.alpha_initial;
  sliding_.alpha_initial = cfg.alpha_initial;
  sliding_.alpha_max = cfg.alpha_max;
  sliding_.learn_rates = cfg.learn_rates;
  sliding_.gamma = cfg.gamma;
  sliding_.sat_limit = cfg.sat_limit;
  p_ = p_matrix(sliding_.alpha[0], sliding_.alpha[1]);
  last_.rule_count = net_.rule_count();
}

double PacController::step(double y, double y_r, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const std::size_t k = steps_;

  ControlStep cs;
  cs.e = y_r - y;
  cs.e_dot = (k == 0) ? 0.0 : (cs.e - e_prev_) / dt;
  e_prev_ = cs.e;
  sliding_.err_integral += cs.e * dt;

  const double last_input = cfg_.fourth_input == FourthInput::Reference ? y_r : y;
  const ExtendedInput x_e = ExtendedInput::make(cs.e, cs.e_dot, last_input);

  if (cfg_.evolve) {
    update_input_mean(evo_, x_e);
    const BiasVariance bv = network_bias_variance(net_, evo_, y_r);
    cs.bias = std::sqrt(bv.bias2);
    cs.variance = bv.variance;
    // Bias below rounding level of the reference is treated as zero so float
    // noise in an otherwise idle loop does not read as a rising trend.
    const double bias_signal =
        cs.bias <= kBiasResolution * std::max(1.0, std::abs(y_r)) ? 0.0 : cs.bias;
    if (check_grow(evo_, bias_signal)) {
      evo_.variance.update(cs.variance);
      const double target = cfg_.grow_target == GrowTarget::Reference
                                ? y_r
                                : network_output(x_e, net_, y_r).value;
      cs.grew = grow_rule(net_, x_e, target);
      if (cs.grew) ++evo_.grow_count;
    } else if (check_prune(evo_, cs.variance, net_.rule_count())) {
      prune_rule(net_, evo_);
      ++evo_.prune_count;
      cs.pruned = true;
    }
    if (cs.grew || cs.pruned) {
      events_.push_back({k, cs.grew ? EvolutionEvent::Kind::Grow : EvolutionEvent::Kind::Prune,
                         net_.rule_count(), cs.bias, cs.variance});
    }
  }

  PalmOutput out = network_output(x_e, net_, y_r);
  cs.firing = std::move(out.firing);
  cs.u_palm = out.value;
  cs.s_l = sliding_value(cs.e, cs.e_dot, sliding_.err_integral, sliding_);
  cs.u_src = robustifying_term(cs.s_l, sliding_);
  cs.u = cs.u_src - cs.u_palm;
  cs.command = std::clamp(cs.u, -cfg_.output_limit, cfg_.output_limit);
  cs.rule_count = net_.rule_count();

  if (!std::isfinite(cs.u) || !std::isfinite(cs.s_l)) {
    std::ostringstream dump;
    dump << "non-finite control (e=" << cs.e << ", e_dot=" << cs.e_dot << ", s_l=" << cs.s_l
         << ", u_palm=" << cs.u_palm << ", rules=" << net_.rule_count() << ")";
    throw ControllerFault(k, dump.str());
  }

  try {
    adapt_weights(net_, cs, sliding_.gamma, p_, x_e, dt, cfg_.weight_bound);
  } catch (const ControllerFault& fault) {
    throw ControllerFault(k, fault.what());
  }

  const Triple before = sliding_.alpha;
  sliding_ = adapt_sliding_params(sliding_, cs.e, cs.e_dot, dt);
  if (sliding_.alpha != before) p_ = p_matrix(sliding_.alpha[0], sliding_.alpha[1]);

  if (!all_finite(net_)) throw ControllerFault(k, "non-finite weights after adaptation");

  last_ = std::move(cs);
  ++steps_;
  return last_.command;
}

StepRecord PacController::last_record() const {
  return {last_.e,     last_.s_l,        last_.u_src, last_.u_palm,
          last_.command, last_.rule_count, last_.bias,  last_.variance};
}

}  // namespace pac
