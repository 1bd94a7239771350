#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tles/core/error.hpp"

namespace tles::stats {

inline void check_two_classes(std::span<const int> labels) {
  long pos = 0, neg = 0;
  for (int y : labels) (y != 0 ? pos : neg)++;
  require(pos >= 1 && neg >= 1, "STATS_SINGLE_CLASS",
          "need at least one positive and one negative (got " + std::to_string(pos) + "/" +
              std::to_string(neg) + ")");
}

/// Midranks of `values` (average rank over tied runs, ranks starting at 1).
inline std::vector<double> midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double mid = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
    i = j + 1;
  }
  return ranks;
}

/// AUC as the Mann-Whitney statistic: the mean over all (positive, negative)
/// pairs of 1 / 0.5 / 0 for win / tie / loss. Computed via midranks, which is
/// algebraically identical to the pairwise mean.
inline double auc(std::span<const double> scores, std::span<const int> labels) {
  require(scores.size() == labels.size(), "STATS_SHAPE", "scores/labels length mismatch");
  check_two_classes(labels);
  const auto ranks = midranks(scores);
  double rank_sum_pos = 0.0;
  long m = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0) {
      rank_sum_pos += ranks[i];
      ++m;
    }
  }
  const long n = static_cast<long>(labels.size()) - m;
  return (rank_sum_pos - 0.5 * m * (m + 1.0)) / (static_cast<double>(m) * n);
}

/// ROC curve points: one (fpr, tpr) step per distinct score threshold,
/// thresholds descending, prefixed by (0, 0).
struct RocCurve {
  std::vector<double> thresholds;
  std::vector<double> fpr;
  std::vector<double> tpr;
};

inline RocCurve roc_points(std::span<const double> scores, std::span<const int> labels) {
  check_two_classes(labels);
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  long pos_total = 0, neg_total = 0;
  for (int y : labels) (y != 0 ? pos_total : neg_total)++;
  RocCurve curve;
  curve.thresholds.push_back(std::numeric_limits<double>::infinity());
  curve.fpr.push_back(0.0);
  curve.tpr.push_back(0.0);
  long tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < n) {
    const double thr = scores[order[i]];
    while (i < n && scores[order[i]] == thr) {
      (labels[order[i]] != 0 ? tp : fp)++;
      ++i;
    }
    curve.thresholds.push_back(thr);
    curve.fpr.push_back(static_cast<double>(fp) / neg_total);
    curve.tpr.push_back(static_cast<double>(tp) / pos_total);
  }
  return curve;
}

/// Trapezoidal area under an ROC curve (equals `auc` up to roundoff).
inline double trapezoid_area(const RocCurve& c) {
  double area = 0.0;
  for (std::size_t i = 1; i < c.fpr.size(); ++i)
    area += 0.5 * (c.tpr[i] + c.tpr[i - 1]) * (c.fpr[i] - c.fpr[i - 1]);
  return area;
}

}  // namespace tles::stats
