#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "tles/stats/delong.hpp"

namespace tles::stats {

/// U statistic for sample A against sample B: wins + half-ties over all
/// (a, b) pairs.
inline double mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  double u = 0.0;
  for (double x : a)
    for (double y : b) {
      if (x > y)
        u += 1.0;
      else if (x == y)
        u += 0.5;
    }
  return u;
}

namespace detail {

inline bool has_ties(std::span<const double> a, std::span<const double> b) {
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) != all.end();
}

/// Exact null distribution of U by enumerating all C(n, n_a) assignments of
/// the pooled sorted values to group A. Tie-free inputs only.
inline void enumerate_u(const std::vector<double>& pooled, std::size_t na,
                        std::vector<double>& us) {
  const std::size_t n = pooled.size();
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(na), true);
  std::sort(mask.begin(), mask.end());  // lexicographically smallest
  do {
    std::vector<double> ga, gb;
    for (std::size_t i = 0; i < n; ++i) (mask[i] ? ga : gb).push_back(pooled[i]);
    us.push_back(mann_whitney_u(ga, gb));
  } while (std::next_permutation(mask.begin(), mask.end()));
}

}  // namespace detail

/// Mann-Whitney-Wilcoxon test. Exact p by enumeration when n_a + n_b <= 12
/// and the pooled sample is tie-free; otherwise the normal approximation with
/// tie correction and continuity correction.
inline TestResult mann_whitney(std::span<const double> a, std::span<const double> b,
                               Alternative alt) {
  require(!a.empty() && !b.empty(), "STATS_TOO_FEW", "mann_whitney needs non-empty samples");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double u_obs = mann_whitney_u(a, b);

  TestResult r;
  r.kind = TestKind::mann_whitney;
  r.alternative = alt;
  r.tail = tail_of(alt);
  r.statistic = u_obs;
  r.n_pos_a = static_cast<long>(a.size());
  r.n_pos_b = static_cast<long>(b.size());

  if (a.size() + b.size() <= 12 && !detail::has_ties(a, b)) {
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::sort(pooled.begin(), pooled.end());
    std::vector<double> us;
    detail::enumerate_u(pooled, a.size(), us);
    const double total = static_cast<double>(us.size());
    double le = 0, ge = 0;
    for (double u : us) {
      if (u <= u_obs) ++le;
      if (u >= u_obs) ++ge;
    }
    switch (alt) {
      case Alternative::less:
        r.p_value = le / total;
        break;
      case Alternative::greater:
        r.p_value = ge / total;
        break;
      case Alternative::two_sided:
        r.p_value = std::min(1.0, 2.0 * std::min(le, ge) / total);
        break;
    }
    return r;
  }

  // Normal approximation with tie correction.
  const double mean_u = 0.5 * na * nb;
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());
  const double n = na + nb;
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j + 1 < pooled.size() && pooled[j + 1] == pooled[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }
  const double var_u = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (var_u <= 0.0) {
    // All values tied: no evidence either way.
    r.degenerate = true;
    r.p_value = (alt == Alternative::two_sided) ? 1.0 : 0.5;
    return r;
  }
  const double sd = std::sqrt(var_u);
  const double diff = u_obs - mean_u;
  // Continuity correction of 0.5 toward the mean, never past it.
  auto cc = [](double x) { return std::max(x, 0.0); };
  switch (alt) {
    case Alternative::greater:
      r.p_value = 1.0 - normal_cdf((diff > 0 ? cc(diff - 0.5) : diff + 0.5) / sd);
      break;
    case Alternative::less:
      r.p_value = normal_cdf((diff < 0 ? -cc(-diff - 0.5) : diff - 0.5) / sd);
      break;
    case Alternative::two_sided:
      r.p_value = 2.0 * (1.0 - normal_cdf(cc(std::fabs(diff) - 0.5) / sd));
      break;
  }
  r.p_value = std::clamp(r.p_value, 0.0, 1.0);
  return r;
}

}  // namespace tles::stats
