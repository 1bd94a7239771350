#pragma once

#include <algorithm>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tles/core/rng.hpp"
#include "tles/stats/auc.hpp"

namespace tles::testing {

/// Independent AUC oracle: exhaustive O(P*N) pairwise concordance with
/// half-credit ties. Kept deliberately naive so it cannot share a bug with
/// the rank-based implementation.
inline double brute_force_auc(std::span<const double> scores, std::span<const int> labels) {
  std::vector<double> pos, neg;
  for (std::size_t i = 0; i < labels.size(); ++i)
    (labels[i] != 0 ? pos : neg).push_back(scores[i]);
  double wins = 0.0;
  for (double p : pos)
    for (double n : neg) {
      if (p > n)
        wins += 1.0;
      else if (p == n)
        wins += 0.5;
    }
  return wins / (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

/// Kolmogorov-Smirnov statistic of a sample against Uniform(0,1).
inline double ks_uniform_statistic(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f_lo = static_cast<double>(i) / n;
    const double f_hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(std::fabs(sample[i] - f_lo), std::fabs(sample[i] - f_hi)));
  }
  return d;
}

/// Sign-flip permutation oracle for the paired AUC-difference test: under the
/// null the two models are exchangeable per case, so swapping scores within a
/// random subset of cases gives the null distribution of the AUC difference.
inline double paired_permutation_p(std::span<const double> a, std::span<const double> b,
                                   std::span<const int> labels, bool two_sided, int reps,
                                   tles::Rng& rng) {
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  const double observed =
      tles::stats::auc(sa, labels) - tles::stats::auc(sb, labels);
  int at_least = 0;
  for (int r = 0; r < reps; ++r) {
    std::vector<double> pa = sa, pb = sb;
    for (std::size_t i = 0; i < pa.size(); ++i)
      if (rng.bernoulli(0.5)) std::swap(pa[i], pb[i]);
    const double delta = tles::stats::auc(pa, labels) - tles::stats::auc(pb, labels);
    if (two_sided ? std::fabs(delta) >= std::fabs(observed) - 1e-12
                  : delta <= observed + 1e-12)
      ++at_least;
  }
  return (at_least + 1.0) / (reps + 1.0);
}

/// Unique scratch directory under the build tree.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("tles_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace tles::testing
