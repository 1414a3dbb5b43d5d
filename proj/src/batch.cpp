#include "pac/batch.hpp"

#include <exception>
#include <stdexcept>

#include <omp.h>

namespace pac {

std::vector<Job> expand_jobs(const std::vector<ExperimentConfig>& configs) {
  std::vector<Job> jobs;
  for (const auto& cfg : configs) {
    for (const auto& c : cfg.controllers) jobs.push_back({cfg, c});
  }
  return jobs;
}

std::vector<ExperimentResult> run_batch_serial(const std::vector<Job>& jobs) {
  std::vector<ExperimentResult> out;
  out.reserve(jobs.size());
  for (const auto& job : jobs) out.push_back(run_experiment(job.config, job.controller));
  return out;
}

std::vector<ExperimentResult> run_batch_parallel(const std::vector<Job>& jobs, int threads) {
  std::vector<ExperimentResult> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto n = static_cast<long>(jobs.size());
  if (threads <= 0) threads = omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = run_experiment(jobs[i].config, jobs[i].controller);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace pac
