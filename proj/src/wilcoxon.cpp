#include "pac/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pac {

SignedRanks signed_ranks(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("paired series lengths differ");
  std::vector<double> mag;
  SignedRanks sr;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d == 0.0) continue;
    mag.push_back(std::abs(d));
    sr.signs.push_back(d > 0.0 ? 1 : -1);
  }
  const std::size_t n = mag.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return mag[i] < mag[j]; });

  sr.ranks.assign(n, 0.0);
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    while (hi + 1 < n && mag[order[hi + 1]] == mag[order[lo]]) ++hi;
    const double midrank = 0.5 * static_cast<double>(lo + hi) + 1.0;
    for (std::size_t k = lo; k <= hi; ++k) sr.ranks[order[k]] = midrank;
    const double t = static_cast<double>(hi - lo + 1);
    sr.tie_term += t * t * t - t;
    lo = hi + 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    (sr.signs[i] > 0 ? sr.w_plus : sr.w_minus) += sr.ranks[i];
  }
  return sr;
}

double wilcoxon_exact_p(const SignedRanks& sr) {
  const std::size_t n = sr.n();
  if (n == 0) return 1.0;
  // Midranks are multiples of 1/2, so doubled ranks are integers.
  std::vector<std::size_t> doubled(n);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    doubled[i] = static_cast<std::size_t>(std::llround(2.0 * sr.ranks[i]));
    total += doubled[i];
  }
  std::vector<double> ways(total + 1, 0.0);
  ways[0] = 1.0;
  for (std::size_t r : doubled) {
    for (std::size_t s = total; s >= r; --s) {
      ways[s] += ways[s - r];
      if (s == r) break;
    }
  }
  const double w = std::min(sr.w_plus, sr.w_minus);
  const auto limit = static_cast<std::size_t>(std::llround(2.0 * w));
  double below = 0.0;
  for (std::size_t s = 0; s <= limit && s <= total; ++s) below += ways[s];
  const double p = 2.0 * below / std::ldexp(1.0, static_cast<int>(n));
  return std::min(1.0, p);
}

double wilcoxon_normal_p(const SignedRanks& sr) {
  const double n = static_cast<double>(sr.n());
  if (n == 0.0) return 1.0;
  const double mean = n * (n + 1.0) / 4.0;
  const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - sr.tie_term / 48.0;
  if (!(var > 0.0)) return 1.0;
  const double w = std::min(sr.w_plus, sr.w_minus);
  const double z = std::min(0.0, (w - mean + 0.5) / std::sqrt(var));
  return std::min(1.0, std::erfc(-z / std::sqrt(2.0)));
}

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b,
                                    double alpha, std::size_t exact_limit) {
  if (a.size() != b.size()) throw std::invalid_argument("paired series lengths differ");
  if (a.size() < 6) throw std::invalid_argument("need at least 6 pairs");
  const SignedRanks sr = signed_ranks(a, b);
  WilcoxonResult r;
  r.n = sr.n();
  r.w = std::min(sr.w_plus, sr.w_minus);
  r.exact = r.n <= exact_limit;
  r.p = r.exact ? wilcoxon_exact_p(sr) : wilcoxon_normal_p(sr);
  r.h = r.p < alpha ? 1 : 0;
  return r;
}

}  // namespace pac
