// Command-line front end: run one experiment, run a suite, or compare two
// step logs with the signed-rank test.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pac/batch.hpp"
#include "pac/config.hpp"
#include "pac/experiment.hpp"
#include "pac/timeseries.hpp"
#include "pac/wilcoxon.hpp"

namespace {

constexpr int kExitDiverged = 2;

struct RunOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  bool serial = false;
};

void apply_overrides(std::vector<pac::ExperimentConfig>& cfgs, const RunOptions& opt) {
  for (auto& c : cfgs) {
    if (opt.seed) c.seed = *opt.seed;
    if (!opt.out.empty()) c.output_dir = opt.out;
  }
}

int finish(const std::vector<pac::ExperimentResult>& results, const std::string& dir) {
  std::filesystem::create_directories(dir);
  bool diverged = false;
  for (const auto& r : results) {
    pac::write_experiment_files(dir, r);
    if (r.diverged) {
      diverged = true;
      std::cerr << r.label << " / " << r.controller << ": " << r.error << '\n';
    }
  }
  const std::string summary = (std::filesystem::path(dir) / "summary.csv").string();
  pac::write_summary(summary, results);
  std::cout << pac::kSummaryHeader << '\n';
  for (const auto& r : results) std::cout << pac::summary_row(r) << '\n';
  return diverged ? kExitDiverged : 0;
}

int cmd_run(const RunOptions& opt) {
  std::vector<pac::ExperimentConfig> cfgs{pac::load_experiment(opt.config)};
  apply_overrides(cfgs, opt);
  const auto results = pac::run_batch_serial(pac::expand_jobs(cfgs));
  return finish(results, cfgs.front().output_dir);
}

int cmd_suite(const RunOptions& opt) {
  auto cfgs = pac::load_suite(opt.config);
  if (cfgs.empty()) throw std::invalid_argument("suite lists no experiments");
  apply_overrides(cfgs, opt);
  const auto jobs = pac::expand_jobs(cfgs);
  const auto results =
      opt.serial ? pac::run_batch_serial(jobs) : pac::run_batch_parallel(jobs, opt.threads);
  return finish(results, cfgs.front().output_dir);
}

int cmd_compare(const std::string& a_path, const std::string& b_path, double alpha) {
  const auto a = pac::read_series(a_path);
  const auto b = pac::read_series(b_path);
  std::vector<double> ra, rb;
  for (const auto& row : a) ra.push_back(std::abs(row.y_r - row.y));
  for (const auto& row : b) rb.push_back(std::abs(row.y_r - row.y));
  const auto res = pac::wilcoxon_signed_rank(ra, rb, alpha);
  std::cout << "n,W,p,h,method\n"
            << res.n << ',' << pac::format_double(res.w) << ',' << pac::format_double(res.p) << ','
            << res.h << ',' << (res.exact ? "exact" : "normal") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolving neuro-fuzzy flight controller experiments"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Run every controller of one experiment");
  run->add_option("config", run_opt.config, "Experiment JSON file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", run_opt.out, "Output directory (overrides output_dir)");
  run->add_option("--seed", run_opt.seed, "Seed recorded with the run");

  RunOptions suite_opt;
  auto* suite = app.add_subcommand("suite", "Run a batch of experiments");
  suite->add_option("config", suite_opt.config, "Suite JSON file")->required()->check(CLI::ExistingFile);
  suite->add_option("--out", suite_opt.out, "Output directory (overrides output_dir)");
  suite->add_option("--seed", suite_opt.seed, "Seed recorded with every run");
  suite->add_option("--threads", suite_opt.threads, "Worker threads (0: OpenMP default)");
  suite->add_flag("--serial", suite_opt.serial, "Use the single-threaded runner");

  std::string csv_a, csv_b;
  double alpha = 0.05;
  auto* compare = app.add_subcommand("compare", "Signed-rank test on per-step absolute errors");
  compare->add_option("csvA", csv_a, "First step log")->required()->check(CLI::ExistingFile);
  compare->add_option("csvB", csv_b, "Second step log")->required()->check(CLI::ExistingFile);
  compare->add_option("--alpha", alpha, "Significance level")->check(CLI::Range(0.0, 1.0));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_opt);
    if (*suite) return cmd_suite(suite_opt);
    if (*compare) return cmd_compare(csv_a, csv_b, alpha);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
