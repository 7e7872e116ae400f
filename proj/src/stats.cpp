#include "phondur/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "phondur/error.hpp"

namespace phondur::stats {

double normal_two_tailed_p(double z) {
  // P(|Z| >= |z|) = erfc(|z| / sqrt(2))
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

BhResult benjamini_hochberg(const std::vector<double>& p, double alpha) {
  size_t m = p.size();
  BhResult r;
  r.adjusted.assign(m, 1.0);
  r.rejected.assign(m, false);
  if (m == 0) return r;
  for (double v : p)
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("benjamini_hochberg: p-values must be in [0,1]");

  std::vector<size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return p[a] < p[b]; });

  // step-up: largest i with p(i) <= i*alpha/m rejects ranks 1..i
  long cutoff = -1;
  for (long i = static_cast<long>(m) - 1; i >= 0; --i) {
    double threshold = alpha * static_cast<double>(i + 1) / static_cast<double>(m);
    if (p[order[i]] <= threshold) {
      cutoff = i;
      break;
    }
  }
  for (long i = 0; i <= cutoff; ++i) r.rejected[order[i]] = true;
  r.n_rejected = static_cast<int>(cutoff + 1);

  // adjusted(i) = min_{j >= i} m*p(j)/j, clipped at 1
  double running = 1.0;
  for (long i = static_cast<long>(m) - 1; i >= 0; --i) {
    double v = p[order[i]] * static_cast<double>(m) / static_cast<double>(i + 1);
    running = std::min(running, v);
    r.adjusted[order[i]] = running;
  }
  return r;
}

std::vector<double> average_ranks(const std::vector<double>& x) {
  size_t n = x.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n, 0.0);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double mean(const std::vector<double>& x) {
  if (x.empty()) throw ValidationError("mean: empty vector");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_sd(const std::vector<double>& x) {
  if (x.size() < 2) throw ValidationError("sample_sd: need >= 2 values");
  double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return std::sqrt(s / static_cast<double>(x.size() - 1));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ValidationError("pearson: length mismatch");
  size_t n = x.size();
  if (n < 3) throw ValidationError("pearson: need >= 3 points");
  double mx = mean(x), my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw ValidationError("pearson: constant input");
  return sxy / std::sqrt(sxx * syy);
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(average_ranks(x), average_ranks(y));
}

}  // namespace phondur::stats
