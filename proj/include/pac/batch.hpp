// Runs many experiments. The parallel runner gives each job its own plant and
// controller and stores results by job index, so its output is identical to
// the serial runner's.

#ifndef PAC_BATCH_HPP
#define PAC_BATCH_HPP

#include <string>
#include <vector>

#include "pac/config.hpp"
#include "pac/experiment.hpp"

namespace pac {

struct Job {
  ExperimentConfig config;
  std::string controller;
};

/// One job per (experiment, controller), in listing order.
std::vector<Job> expand_jobs(const std::vector<ExperimentConfig>& configs);

std::vector<ExperimentResult> run_batch_serial(const std::vector<Job>& jobs);

/// `threads` <= 0 uses the OpenMP default.
std::vector<ExperimentResult> run_batch_parallel(const std::vector<Job>& jobs, int threads = 0);

}  // namespace pac

#endif  // PAC_BATCH_HPP
