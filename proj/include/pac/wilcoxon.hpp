// Two-sided Wilcoxon signed-rank test on paired samples.

#ifndef PAC_WILCOXON_HPP
#define PAC_WILCOXON_HPP

#include <cstddef>
#include <vector>

namespace pac {

struct SignedRanks {
  std::vector<double> ranks;  // midranks of |d|, zero differences dropped
  std::vector<int> signs;     // +1 / -1 per kept difference
  double w_plus = 0.0;
  double w_minus = 0.0;
  double tie_term = 0.0;  // sum over tie groups of (t^3 - t)
  std::size_t n() const { return ranks.size(); }
};

SignedRanks signed_ranks(const std::vector<double>& a, const std::vector<double>& b);

struct WilcoxonResult {
  double w = 0.0;  // min(W+, W-)
  double p = 1.0;
  int h = 0;
  std::size_t n = 0;  // nonzero differences
  bool exact = true;
};

/// Exact two-sided p from the permutation distribution of W+ over the
/// (mid)ranks: min(1, 2 P(W+ <= w)).
double wilcoxon_exact_p(const SignedRanks& sr);

/// Normal approximation with tie and continuity corrections.
double wilcoxon_normal_p(const SignedRanks& sr);

/// Exact for n <= exact_limit, normal approximation above. h = 1 iff p < alpha.
/// Throws std::invalid_argument for mismatched lengths or fewer than 6 pairs.
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b,
                                    double alpha = 0.05, std::size_t exact_limit = 25);

}  // namespace pac

#endif  // PAC_WILCOXON_HPP
