#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "tles/stats/auc.hpp"
#include "tles/stats/normal.hpp"

namespace tles::stats {

enum class TestKind { delong_paired, delong_unpaired, mann_whitney };
enum class Tail { one, two };
enum class Alternative { less, greater, two_sided };

inline Tail tail_of(Alternative alt) {
  return alt == Alternative::two_sided ? Tail::two : Tail::one;
}

struct TestResult {
  TestKind kind;
  Tail tail;
  Alternative alternative;
  double statistic = 0.0;
  double p_value = 1.0;
  long n_pos_a = 0, n_neg_a = 0;
  long n_pos_b = 0, n_neg_b = 0;
  bool degenerate = false;  // zero-variance comparison, p is the flagged neutral value
};

/// Placement values: for each positive, the fraction of negatives it beats
/// (ties count 1/2), and symmetrically for negatives. mean(pos placements) ==
/// mean(neg placements) == AUC.
struct Placements {
  std::vector<double> pos;  // V10, one per positive
  std::vector<double> neg;  // V01, one per negative
  double auc = 0.0;
};

inline Placements placements(std::span<const double> scores, std::span<const int> labels) {
  require(scores.size() == labels.size(), "STATS_SHAPE", "scores/labels length mismatch");
  std::vector<double> xs, ys;  // positive / negative scores
  for (std::size_t i = 0; i < labels.size(); ++i)
    (labels[i] != 0 ? xs : ys).push_back(scores[i]);
  require(!xs.empty() && !ys.empty(), "STATS_SINGLE_CLASS", "need both classes");
  std::vector<double> ys_sorted = ys, xs_sorted = xs;
  std::sort(ys_sorted.begin(), ys_sorted.end());
  std::sort(xs_sorted.begin(), xs_sorted.end());
  Placements out;
  out.pos.reserve(xs.size());
  out.neg.reserve(ys.size());
  const double m = static_cast<double>(xs.size());
  const double n = static_cast<double>(ys.size());
  for (double x : xs) {
    const auto lo = std::lower_bound(ys_sorted.begin(), ys_sorted.end(), x) - ys_sorted.begin();
    const auto hi = std::upper_bound(ys_sorted.begin(), ys_sorted.end(), x) - ys_sorted.begin();
    out.pos.push_back((static_cast<double>(lo) + 0.5 * (hi - lo)) / n);
  }
  for (double y : ys) {
    const auto lo = std::lower_bound(xs_sorted.begin(), xs_sorted.end(), y) - xs_sorted.begin();
    const auto hi = std::upper_bound(xs_sorted.begin(), xs_sorted.end(), y) - xs_sorted.begin();
    const double above = m - static_cast<double>(hi);
    out.neg.push_back((above + 0.5 * (hi - lo)) / m);
  }
  double s = 0.0;
  for (double v : out.pos) s += v;
  out.auc = s / m;
  return out;
}

inline double sample_variance(std::span<const double> v, double mean) {
  require(v.size() >= 2, "STATS_TOO_FEW", "sample variance needs >= 2 values");
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return s / (static_cast<double>(v.size()) - 1.0);
}

inline double sample_covariance(std::span<const double> a, double mean_a,
                                std::span<const double> b, double mean_b) {
  require(a.size() == b.size() && a.size() >= 2, "STATS_TOO_FEW", "covariance needs >= 2 pairs");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - mean_a) * (b[i] - mean_b);
  return s / (static_cast<double>(a.size()) - 1.0);
}

struct DelongEstimate {
  double auc = 0.0;
  double variance = 0.0;
  long n_pos = 0, n_neg = 0;
};

/// DeLong AUC variance: S10/m + S01/n with S10, S01 the sample variances
/// (n-1 denominator) of the positive and negative placement values.
inline DelongEstimate delong_variance(std::span<const double> scores, std::span<const int> labels) {
  const Placements pl = placements(scores, labels);
  require(pl.pos.size() >= 2 && pl.neg.size() >= 2, "STATS_TOO_FEW",
          "DeLong variance needs >= 2 per class");
  DelongEstimate est;
  est.auc = pl.auc;
  est.n_pos = static_cast<long>(pl.pos.size());
  est.n_neg = static_cast<long>(pl.neg.size());
  const double s10 = sample_variance(pl.pos, pl.auc);
  const double s01 = sample_variance(pl.neg, pl.auc);
  est.variance = s10 / est.n_pos + s01 / est.n_neg;
  return est;
}

struct ConfidenceInterval {
  double lo = 0.0, hi = 1.0;
  bool clipped_lo = false, clipped_hi = false;
};

/// Wald interval auc +- z * sqrt(var), clipped to [0, 1] (clipping flagged).
inline ConfidenceInterval delong_ci(std::span<const double> scores, std::span<const int> labels,
                                    double level = 0.95) {
  require(level > 0.0 && level < 1.0, "STATS_DOMAIN", "CI level must be in (0,1)");
  const DelongEstimate est = delong_variance(scores, labels);
  const double z = normal_quantile(0.5 + level / 2.0);
  const double half = z * std::sqrt(est.variance);
  ConfidenceInterval ci;
  ci.lo = est.auc - half;
  ci.hi = est.auc + half;
  if (ci.lo < 0.0) {
    ci.lo = 0.0;
    ci.clipped_lo = true;
  }
  if (ci.hi > 1.0) {
    ci.hi = 1.0;
    ci.clipped_hi = true;
  }
  return ci;
}

/// Shared z -> p mapping. An exactly zero denominator with a zero numerator
/// is flagged degenerate and returns the neutral p (0.5 one-tailed, 1.0
/// two-tailed); a nonzero numerator over a zero denominator is an infinite z.
inline TestResult z_test_result(TestKind kind, Alternative alt, double delta, double variance) {
  TestResult r;
  r.kind = kind;
  r.alternative = alt;
  r.tail = tail_of(alt);
  if (variance <= 0.0) {
    if (delta == 0.0) {
      r.degenerate = true;
      r.statistic = 0.0;
      r.p_value = (alt == Alternative::two_sided) ? 1.0 : 0.5;
      return r;
    }
    r.statistic = delta > 0 ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
  } else {
    r.statistic = delta / std::sqrt(variance);
  }
  const double z = r.statistic;
  switch (alt) {
    case Alternative::less:
      r.p_value = normal_cdf(z);
      break;
    case Alternative::greater:
      r.p_value = 1.0 - normal_cdf(z);
      break;
    case Alternative::two_sided:
      r.p_value = 2.0 * (1.0 - normal_cdf(std::fabs(z)));
      break;
  }
  r.p_value = std::clamp(r.p_value, 0.0, 1.0);
  return r;
}

/// Paired DeLong test: both score vectors cover the same cases in the same
/// order. `alt` states the alternative for auc_a relative to auc_b.
inline TestResult delong_test_paired(std::span<const double> scores_a,
                                     std::span<const double> scores_b,
                                     std::span<const int> labels, Alternative alt) {
  require(scores_a.size() == scores_b.size() && scores_a.size() == labels.size(),
          "STATS_SHAPE", "paired test needs equal-length inputs");
  const Placements pa = placements(scores_a, labels);
  const Placements pb = placements(scores_b, labels);
  const long m = static_cast<long>(pa.pos.size());
  const long n = static_cast<long>(pa.neg.size());
  require(m >= 2 && n >= 2, "STATS_TOO_FEW", "paired DeLong needs >= 2 per class");
  const double var_a = sample_variance(pa.pos, pa.auc) / m + sample_variance(pa.neg, pa.auc) / n;
  const double var_b = sample_variance(pb.pos, pb.auc) / m + sample_variance(pb.neg, pb.auc) / n;
  const double cov = sample_covariance(pa.pos, pa.auc, pb.pos, pb.auc) / m +
                     sample_covariance(pa.neg, pa.auc, pb.neg, pb.auc) / n;
  double var_diff = var_a + var_b - 2.0 * cov;
  if (var_diff < 0.0) var_diff = 0.0;  // guard roundoff; the matrix is PSD
  TestResult r = z_test_result(TestKind::delong_paired, alt, pa.auc - pb.auc, var_diff);
  r.n_pos_a = r.n_pos_b = m;
  r.n_neg_a = r.n_neg_b = n;
  return r;
}

/// Unpaired DeLong test on two disjoint samples.
inline TestResult delong_test_unpaired(std::span<const double> scores_a,
                                       std::span<const int> labels_a,
                                       std::span<const double> scores_b,
                                       std::span<const int> labels_b, Alternative alt) {
  const DelongEstimate ea = delong_variance(scores_a, labels_a);
  const DelongEstimate eb = delong_variance(scores_b, labels_b);
  TestResult r =
      z_test_result(TestKind::delong_unpaired, alt, ea.auc - eb.auc, ea.variance + eb.variance);
  r.n_pos_a = ea.n_pos;
  r.n_neg_a = ea.n_neg;
  r.n_pos_b = eb.n_pos;
  r.n_neg_b = eb.n_neg;
  return r;
}

}  // namespace tles::stats
