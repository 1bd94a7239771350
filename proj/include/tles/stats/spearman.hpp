#pragma once

#include <cmath>
#include <span>

#include "tles/stats/auc.hpp"

namespace tles::stats {

/// Spearman rank correlation with midranks for ties.
inline double spearman(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), "STATS_SHAPE", "spearman needs equal-length inputs");
  require(x.size() >= 2, "STATS_TOO_FEW", "spearman needs >= 2 pairs");
  const auto rx = midranks(x);
  const auto ry = midranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = rx[i] - mx, dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  require(sxx > 0 && syy > 0, "STATS_DEGENERATE", "spearman on constant input");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace tles::stats
