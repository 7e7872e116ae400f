#ifndef PHONDUR_STATS_HPP
#define PHONDUR_STATS_HPP

#include <vector>

namespace phondur::stats {

// Two-tailed standard-normal p-value for a z statistic.
double normal_two_tailed_p(double z);

// Benjamini-Hochberg step-up over raw p-values.
struct BhResult {
  std::vector<double> adjusted;  // monotone adjusted p-values, in input order
  std::vector<bool> rejected;    // p(i) rejected at level alpha
  int n_rejected = 0;
};
BhResult benjamini_hochberg(const std::vector<double>& p, double alpha);

// Ranks with ties replaced by their average rank (1-based).
std::vector<double> average_ranks(const std::vector<double>& x);

// Spearman rank correlation with average ranks for ties. Requires >= 3
// points and nonconstant inputs.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

double mean(const std::vector<double>& x);
double sample_sd(const std::vector<double>& x);
double pearson(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace phondur::stats

#endif  // PHONDUR_STATS_HPP
