// Acceptance checks. One PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.
//
//   pac_acceptance [<pac-cli> <suite-config> <work-dir>]
//
// With the optional arguments the determinism check also drives the CLI.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pac/batch.hpp"
#include "pac/config.hpp"
#include "pac/controller.hpp"
#include "pac/disturbance.hpp"
#include "pac/evolution.hpp"
#include "pac/experiment.hpp"
#include "pac/flapping_mav.hpp"
#include "pac/hexacopter.hpp"
#include "pac/palm.hpp"
#include "pac/pid.hpp"
#include "pac/rigid_body.hpp"
#include "pac/wilcoxon.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
  }
  void info(const std::string& what) { notes.push_back("info: " + what); }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

struct DoubleIntegrator {
  double x = 0.0, v = 0.0;
  void step(double u, double dt) {
    v += u * dt;
    x += v * dt;
  }
};

pac::HyperplaneRule random_rule(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return pac::HyperplaneRule{{u(rng), u(rng), u(rng), u(rng)}};
}

// ---------------------------------------------------------------------------

Outcome fuzzy_core() {
  Outcome out;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> in(-10.0, 10.0);
  double worst_sum = 0.0, worst_rel = 0.0, worst_dup_single = 0.0, worst_dup_whole = 0.0;
  bool bounds = true, below_sampled = true;
  int single_rule_exact = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 10000; ++i) {
    const std::size_t r = 1 + rng() % 6;
    const double eta = std::uniform_real_distribution<double>(1, 100)(rng);
    pac::PalmNetwork net(eta);
    for (std::size_t j = 0; j < r; ++j) net.add_rule(random_rule(rng));
    const auto x = pac::ExtendedInput::make(in(rng), in(rng), in(rng));
    const double target = x.values[3];
    const auto base = pac::network_output(x, net, target);

    double sum = 0.0;
    for (std::size_t j = 0; j < r; ++j) {
      sum += base.firing.normalized[j];
      if (!(base.firing.raw[j] >= std::exp(-eta) && base.firing.raw[j] <= 1.0)) bounds = false;
    }
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));

    const auto& rule = net.rules()[rng() % r];
    const double d = pac::point_to_plane_distance(x, rule, target);
    const double sampled = oracle::sampled_plane_distance(rule.weights, x.values, target, rng);
    if (d > sampled * (1.0 + 1e-12)) below_sampled = false;
    worst_rel = std::max(worst_rel, std::abs(d - sampled) / std::max(d, 1e-9));

    // one appended copy of an existing rule
    pac::PalmNetwork dup = net;
    dup.add_rule(net.rules()[rng() % r]);
    const double scale = std::max(1.0, std::abs(base.value));
    const double single = std::abs(pac::network_output(x, dup, target).value - base.value) / scale;
    worst_dup_single = std::max(worst_dup_single, single);
    if (r == 1 && single == 0.0) ++single_rule_exact;

    pac::PalmNetwork whole = net;
    for (std::size_t j = 0; j < r; ++j) whole.add_rule(net.rules()[j]);
    worst_dup_whole = std::max(
        worst_dup_whole, std::abs(pac::network_output(x, whole, target).value - base.value) / scale);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.require(worst_sum <= 1e-9, fmt("partition of unity, worst |sum - 1| = %.3g (tol 1e-9)", worst_sum));
  out.require(bounds, "membership grades in [exp(-eta), 1]");
  out.require(below_sampled && worst_rel <= 1e-3,
              fmt("plane distance vs sampled minimum, worst rel diff %.3g (tol 1e-3)", worst_rel));
  out.require(worst_dup_single <= 1e-12,
              fmt("one appended duplicate leaves u_palm unchanged, worst rel change %.3g (tol 1e-12)",
                  worst_dup_single));
  out.info(fmt("appending a copy to a single-rule base is exact in %.0f cases; duplicating the whole "
               "rule base changes u_palm by at most %.3g",
               single_rule_exact, worst_dup_whole));
  out.require(secs < 5.0, fmt("10^4 cases in %.2f s (limit 5 s)", secs));
  return out;
}

Outcome evolution() {
  Outcome out;
  std::mt19937_64 rng(202);
  std::exponential_distribution<double> ex(0.1);
  bool in_range = true;
  for (int i = 0; i < 10000; ++i) {
    const double x = ex(rng);
    const double n = x / (1.0 + x);
    for (double c : {pac::growth_confidence(n), pac::pruning_confidence(n)}) {
      if (!(c > 0.7 && c <= 2.0)) in_range = false;
    }
  }
  out.require(in_range, "growth and pruning confidences in (0.7, 2] over 10^4 signals");
  out.require(pac::growth_confidence(0.0) == 2.0 && pac::pruning_confidence(0.0) == 2.0,
              "confidences equal 2 at zero");

  bool silent = true;
  for (double level : {0.0, 1e-6, 0.5, 3.0, 1e4}) {
    pac::EvolutionState s;
    for (int k = 0; k < 10000; ++k) {
      if (pac::check_grow(s, level) || pac::check_prune(s, level, 5)) silent = false;
    }
  }
  out.require(silent, "constant bias and variance streams never grow or prune");

  // long closed-loop runs
  std::size_t min_rules = 1000, max_rules = 0;
  for (const char* traj : {"step", "sum_of_sines", "square_wave"}) {
    auto cfg = pac::parse_experiment(std::string(R"({"plant": "hexacopter", "trajectory": {"type": ")") +
                                     traj + R"("}, "duration": 100})");
    const auto res = pac::run_experiment(cfg, "pac");
    for (const auto& row : res.series) {
      min_rules = std::min(min_rules, row.rules);
      max_rules = std::max(max_rules, row.rules);
    }
  }
  out.require(min_rules >= 1, fmt("rule count never below 1 over three 100 s runs (min %.0f, max %.0f)",
                                   double(min_rules), double(max_rules)));

  auto replay = [] {
    pac::PacController c;
    DoubleIntegrator p;
    for (int k = 0; k < 20000; ++k) {
      const double yr = 2.0 + std::sin(0.003 * k) + ((k / 2500) % 2 ? 1.5 : 0.0);
      p.step(c.step(p.x, yr, 0.01), 0.01);
    }
    return c.events();
  };
  const auto a = replay(), b = replay();
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) {
    same = a[i].step == b[i].step && a[i].kind == b[i].kind && a[i].rule_count == b[i].rule_count &&
           a[i].bias == b[i].bias && a[i].variance == b[i].variance;
  }
  out.require(same && !a.empty(),
              fmt("replayed run reproduces all %.0f grow/prune events", double(a.size())));
  return out;
}

Outcome smc() {
  Outcome out;
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> la(-3, 1);
  double worst_closed = 0.0, worst_exact = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a1 = std::pow(10.0, la(rng)), a2 = std::pow(10.0, la(rng));
    const auto p = pac::p_matrix(a1, a2);
    const auto q = pac::lyapunov_solution(a1, a2);
    const double scale = std::max({1.0, q.p11, q.p22});
    worst_closed = std::max(worst_closed, pac::lyapunov_residual(p, a1, a2) / scale);
    worst_exact = std::max(worst_exact, pac::lyapunov_residual(q, a1, a2) / scale);
  }
  out.require(worst_closed <= 1e-9,
              fmt("closed-form P solves the Lyapunov equation, worst scaled residual %.3g (tol 1e-9)",
                  worst_closed));
  out.info(fmt("exact solve of the same equation: worst scaled residual %.3g", worst_exact));
  const auto p = pac::p_matrix(1e-2, 1e-3);
  out.require(std::abs(p.p11 - 500.1) <= 1e-9 && std::abs(p.p12 - 50.0) <= 1e-9 &&
                  std::abs(p.p22 - 50500.0) <= 1e-9,
              fmt("P(0.01, 0.001) = [%.10g, %.10g; ., %.10g]", p.p11, p.p12, p.p22));

  // 100 s double-integrator run with the rule base held fixed
  pac::PacConfig cfg;
  cfg.evolve = false;
  pac::PacController c(cfg);
  DoubleIntegrator plant;
  const double dt = 0.01, ref = 1.0;
  const int n = 10000;
  double max_w = 0.0, max_u = 0.0, max_e_late = 0.0;
  std::vector<double> es, eds;
  std::vector<pac::Weights> ws;
  for (int k = 0; k < n; ++k) {
    const double u = c.step(plant.x, ref, dt);
    plant.step(u, dt);
    max_u = std::max(max_u, std::abs(u));
    for (double w : c.network().rules()[0].weights) max_w = std::max(max_w, std::abs(w));
    if ((k + 1) * dt >= 80.0) max_e_late = std::max(max_e_late, std::abs(ref - plant.x));
    es.push_back(ref - plant.x);
    eds.push_back(-plant.v);
    ws.push_back(c.network().rules()[0].weights);
  }
  out.require(max_w <= cfg.weight_bound, fmt("max |w| = %.4g (bound %.4g)", max_w, cfg.weight_bound));
  out.require(max_u <= cfg.output_limit, fmt("max |u| = %.4g (bound %.4g)", max_u, cfg.output_limit));
  out.require(max_e_late < 0.05, fmt("max |e| after 80 s = %.3g (bound 0.05)", max_e_late));

  // V = e^T P e / 2 + |w - w_final|^2 / (2 gamma) over the final half
  const auto& pf = c.p();
  const auto& wf = ws.back();
  int violations = 0;
  double worst_rise = 0.0, prev = 0.0;
  for (int k = n / 2; k < n; ++k) {
    double dw = 0.0;
    for (int i = 0; i < 4; ++i) dw += (ws[k][i] - wf[i]) * (ws[k][i] - wf[i]);
    const double v = 0.5 * (pf.p11 * es[k] * es[k] + 2.0 * pf.p12 * es[k] * eds[k] +
                            pf.p22 * eds[k] * eds[k]) +
                     dw / (2.0 * cfg.gamma);
    if (k > n / 2 && v - prev > 1e-6) {
      ++violations;
      worst_rise = std::max(worst_rise, v - prev);
    }
    prev = v;
  }
  out.require(violations == 0, fmt("V non-increasing over the final 50%%: %.0f steps rise by more than "
                                   "1e-6 (worst %.3g)",
                                   double(violations), worst_rise));

  // the same run with structure evolution switched on
  pac::PacController evolving;
  DoubleIntegrator p2;
  double late = 0.0;
  for (int k = 0; k < n; ++k) {
    p2.step(evolving.step(p2.x, ref, dt), dt);
    if ((k + 1) * dt >= 80.0) late = std::max(late, std::abs(ref - p2.x));
  }
  out.info(fmt("with rule evolution on: max |e| after 80 s = %.3g with %.0f rules", late,
               double(evolving.network().rule_count())));
  return out;
}

Outcome plants() {
  Outcome out;
  pac::InertiaSet in{2.0, 0.04, 0.05, 0.08, 0.0};
  pac::RigidBodyState s;
  s.velocity = pac::Vec3(1.0, -0.5, 0.3);
  s.rates = pac::Vec3(1.5, -0.7, 0.9);
  const double e0 = pac::kinetic_energy(s, in);
  for (int k = 0; k < 1000; ++k) s = pac::rigid_body_step(s, in, pac::Vec3::Zero(), pac::Vec3::Zero(), 0.01);
  const double drift = std::abs(pac::kinetic_energy(s, in) - e0) / e0;
  out.require(drift <= 1e-6, fmt("torque-free energy drift over 10 s = %.3g (tol 1e-6)", drift));

  double worst_hover = 0.0;
  for (auto ch : {pac::Channel::Altitude, pac::Channel::Roll, pac::Channel::Pitch}) {
    pac::RigidBodyState init;
    init.position = pac::Vec3(0, 0, -4);
    pac::Hexacopter hex(pac::HexacopterParams{}, ch, init);
    for (int k = 0; k < 1000; ++k) hex.step(0.0, 0.01, 0.0);
    worst_hover = std::max(worst_hover, std::abs(hex.output(pac::Channel::Altitude) - 4.0));
  }
  {
    pac::RigidBodyState init;
    init.position = pac::Vec3(0, 0, -10);
    pac::FlappingWingMav mav(pac::FlappingMavParams{}, pac::Channel::Altitude, init);
    for (int k = 0; k < 1000; ++k) mav.step(0.0, 0.01, 0.0);
    worst_hover = std::max(worst_hover, std::abs(mav.output(pac::Channel::Altitude) - 10.0));
  }
  out.require(worst_hover < 1e-3, fmt("zero-command hover drift over 10 s = %.3g m (tol 1e-3)", worst_hover));

  pac::GustSpec g;
  const double dm = g.length, vm = g.amplitude;
  const std::vector<std::pair<double, double>> pts{
      {-1.0, 0.0}, {0.0, 0.0}, {dm / 2, vm / 2}, {dm, vm}, {2 * dm, vm}};
  bool gust_exact = true;
  std::string got;
  for (const auto& [x, want] : pts) {
    const double v = pac::gust_velocity(x, g);
    gust_exact = gust_exact && v == want;
    got += fmt(" %.17g", v);
  }
  out.require(gust_exact, "gust profile exact at x = -1, 0, d_m/2, d_m, 2 d_m:" + got);

  const auto fm = pac::bifwmav_force_moment(
      {pac::Vec3(0, 0, -1), pac::Vec3::Zero(), pac::Vec3::Zero(), pac::Vec3::Zero()},
      pac::Vec3::Zero(), 0.05, pac::FlapGeometry{});
  const pac::Vec3 cross = pac::Vec3(0, 0, -1).cross(pac::FlapGeometry{}.cg - pac::FlapGeometry{}.cp[0]);
  out.require(fm.moment == pac::Vec3(0.05, -0.08, 0.0),
              fmt("single-wing moment equals [0.05, -0.08, 0]; got [%.17g, %.17g, %.17g]", fm.moment[0],
                  fm.moment[1], fm.moment[2]));
  out.info(fmt("F x (CG - CP) evaluated directly = [%.17g, %.17g, %.17g]", cross[0], cross[1], cross[2]));
  return out;
}

Outcome hover() {
  Outcome out;
  const auto cfg = pac::parse_experiment(
      R"({"plant": "hexacopter", "trajectory": {"type": "constant", "height": 4}, "duration": 100})");
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = pac::run_experiment(cfg, "pac");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double late = 0.0;
  for (const auto& row : res.series) {
    if (row.t >= 80.0) late = std::max(late, std::abs(row.e));
  }
  out.require(!res.diverged && res.series.size() == cfg.step_count(), "100 s run completes without divergence");
  out.require(late < 0.1, fmt("max |e| after 80 s = %.3g m (bound 0.1)", late));
  const double rules = double(res.final_rules.size());
  out.require(rules <= 10, fmt("final rule count %.0f (limit 10)", rules));
  out.require(secs < 60.0, fmt("runtime %.2f s (limit 60 s)", secs));
  const double rmse = res.metrics.rmse.value_or(INFINITY);
  out.require(rmse < 1.0, fmt("RMSE %.4g m (limit 1.0)", rmse));

  auto literal = cfg;
  literal.pac.gamma = 50.0;
  literal.pac.learn_rates = {0.0, 0.0, 0.0};
  literal.pac.grow_target = pac::GrowTarget::Reference;
  const auto lit = pac::run_experiment(literal, "pac");
  double lit_late = 0.0;
  for (const auto& row : lit.series) {
    if (row.t >= 80.0) lit_late = std::max(lit_late, std::abs(row.e));
  }
  out.info(fmt("gamma 50, fixed alpha (0.01, 0.001), growth toward y_r: max |e| after 80 s = %.3g m, "
               "%.0f rules, RMSE %.3g",
               lit_late, double(lit.final_rules.size()), lit.metrics.rmse.value_or(NAN)));
  return out;
}

Outcome impulse() {
  Outcome out;
  const auto cfg = pac::parse_experiment(
      R"({"plant": "hexacopter", "trajectory": {"type": "constant", "height": 4}, "duration": 60,
          "impulse": {"amplitude": 2, "start": 30, "duration": 0.1}})");
  const auto res = pac::run_experiment(cfg, "pac");
  const double spike_end = cfg.impulse->start + cfg.impulse->duration;
  const double band = 0.05 * 4.0;
  double last_outside = spike_end;
  std::size_t rules_before = 0, rules_after = 0;
  for (const auto& row : res.series) {
    if (row.t < cfg.impulse->start) rules_before = row.rules;
    if (row.t <= spike_end + 5.0) rules_after = std::max(rules_after, row.rules);
    if (row.t >= spike_end - 1e-9 && std::abs(row.e) > band) last_outside = row.t + cfg.dt;
  }
  const double recovery = last_outside - spike_end;
  out.require(!res.diverged, "run completes");
  out.require(recovery <= 5.0,
              fmt("back inside the 5%% band %.3g s after the spike ends and stays there (limit 5 s)", recovery));
  const double grown = double(rules_after) - double(rules_before);
  out.require(grown <= 3, fmt("rules added across the spike: %.0f (limit 3)", grown));
  return out;
}

Outcome parameter_count() {
  Outcome out;
  pac::PacConfig cfg;
  cfg.initial_rules = {pac::HyperplaneRule{}, pac::HyperplaneRule{{0.1, 0, 0, 0}},
                       pac::HyperplaneRule{{0, 0, 0, 0.2}}};
  pac::PacController c(cfg);
  out.require(c.network().parameter_count() == 12,
              fmt("3-rule controller reports %.0f parameters", double(c.network().parameter_count())));

  pac::ExperimentResult r;
  r.controller = "pac";
  r.final_rules = c.network().rules();
  std::ostringstream os;
  pac::write_rule_snapshot(os, r);
  std::istringstream is(os.str());
  std::string line;
  std::size_t values = 0, rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    values += std::count(line.begin(), line.end(), ',');
  }
  out.require(rows == 3 && values == 12, fmt("snapshot holds %.0f rows and %.0f weights", double(rows), double(values)));
  return out;
}

Outcome wilcoxon() {
  Outcome out;
  std::mt19937_64 rng(404);
  std::normal_distribution<double> nd(0, 1);
  int cases = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<double> a(n), b(n);
      const bool coarse = trial % 2 == 0;
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = coarse ? std::round(nd(rng) * 4) / 4 : nd(rng);
        b[i] = coarse ? std::round((nd(rng) + 0.3) * 4) / 4 : nd(rng) + 0.3;
      }
      const auto sr = pac::signed_ranks(a, b);
      if (sr.n() == 0) continue;
      ++cases;
      if (pac::wilcoxon_exact_p(sr) != oracle::enumerate_wilcoxon_p(a, b)) ++mismatches;
    }
  }
  out.require(mismatches == 0,
              fmt("exact p equals full enumeration in %.0f of %.0f datasets with n <= 12",
                  double(cases - mismatches), double(cases)));
  const std::vector<double> same{1.5, 2.5, 3, 4, 5, 6, 7.25, 8};
  const auto id = pac::wilcoxon_signed_rank(same, same);
  out.require(id.h == 0, fmt("identical series: h = %.0f, p = %.3g", double(id.h), id.p));
  const std::vector<double> a{125, 115, 130, 140, 140, 115, 140, 125, 140, 135};
  const std::vector<double> b{110, 122, 125, 120, 130, 110, 130, 116, 125, 123};
  const auto res = pac::wilcoxon_signed_rank(a, b);
  out.require(res.w == 3.0 && res.h == 1, fmt("10-pair example: W = %.0f, p = %.5g, h = %.0f", res.w, res.p, double(res.h)));
  return out;
}

Outcome pid_oracle() {
  Outcome out;
  pac::PidState s;
  s.gains = {4, 0, 4};
  s.out_min = -1e9;
  s.out_max = 1e9;
  const double dt = 1e-3;
  double x = 0, v = 0, worst = 0;
  int points = 0;
  for (int k = 0; k < 5000; ++k) {
    const double u = pac::pid_step(s, 1.0 - x, dt);
    x += v * dt + 0.5 * u * dt * dt;
    v += u * dt;
    if ((k + 1) % 5 == 0) {
      ++points;
      worst = std::max(worst, std::abs(x - oracle::critically_damped_step((k + 1) * dt)));
    }
  }
  out.require(points == 1000 && worst < 0.01,
              fmt("critically damped step, worst deviation %.3g over %.0f points (tol 0.01)", worst,
                  double(points)));
  return out;
}

std::map<std::string, std::string> read_tree(const fs::path& dir) {
  std::map<std::string, std::string> files;
  if (!fs::exists(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".csv") continue;
    std::ifstream is(entry.path(), std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    files[entry.path().filename().string()] = os.str();
  }
  return files;
}

Outcome determinism(int argc, char** argv) {
  Outcome out;
  const auto cfgs = pac::parse_suite(R"({"defaults": {"duration": 20},
      "experiments": [{}, {"trajectory": {"type": "sum_of_sines"}, "gust": {"onset_time": 5}},
                      {"plant": "bifwmav", "trajectory": {"type": "sharp_steps", "levels": [3, 6], "dwell": 10}},
                      {"channel": "roll", "trajectory": {"type": "attitude_sines", "cosine_amplitude": 0.4},
                       "pac": {"alpha_initial": [9, 4, 1e-9]}}]})");
  const auto jobs = pac::expand_jobs(cfgs);
  const auto tmp = fs::temp_directory_path() / "pac_acceptance_determinism";
  fs::remove_all(tmp);
  auto write_all = [&](const std::vector<pac::ExperimentResult>& rs, const fs::path& dir) {
    for (const auto& r : rs) pac::write_experiment_files(dir.string(), r);
    pac::write_summary((dir / "summary.csv").string(), rs);
    return read_tree(dir);
  };
  const auto s1 = write_all(pac::run_batch_serial(jobs), tmp / "serial_a");
  const auto s2 = write_all(pac::run_batch_serial(jobs), tmp / "serial_b");
  const auto p1 = write_all(pac::run_batch_parallel(jobs, 4), tmp / "parallel");
  out.require(!s1.empty() && s1 == s2, fmt("two serial runs write identical bytes (%.0f files)", double(s1.size())));
  out.require(s1 == p1, "parallel run writes the same bytes as the serial run");
  fs::remove_all(tmp);

  if (argc >= 4) {
    const fs::path cli = fs::absolute(argv[1]);
    const fs::path work = argv[3];
    fs::remove_all(work);
    auto run = [&](const std::string& sub, const char* extra) {
      const std::string cmd = std::string("\"") + cli.string() + "\" suite \"" + argv[2] + "\" --out \"" +
                              (work / sub).string() + "\" --seed 7 " + extra + " > /dev/null";
      return std::system(cmd.c_str()) == 0 ? read_tree(work / sub) : std::map<std::string, std::string>{};
    };
    const auto a = run("a", "");
    const auto b = run("b", "");
    const auto c = run("serial", "--serial");
    out.require(!a.empty() && a == b && a == c,
                fmt("CLI suite: repeated and serial runs byte-identical (%.0f files)", double(a.size())));
  } else {
    out.info("CLI not given, in-process runs only");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fuzzy-core", fuzzy_core},
      {"rule-evolution", evolution},
      {"sliding-mode", smc},
      {"plants", plants},
      {"hover-4m", hover},
      {"impulse-recovery", impulse},
      {"parameter-count", parameter_count},
      {"wilcoxon", wilcoxon},
      {"pid-oracle", pid_oracle},
      {"determinism", [&] { return determinism(argc, argv); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    std::printf("%s %s\n", o.pass ? "PASS" : "FAIL", name.c_str());
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
