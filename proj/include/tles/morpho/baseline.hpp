#pragma once

#include <algorithm>
#include <optional>

#include "tles/morpho/rules.hpp"

namespace tles::morpho {

/// Surrogate rule-based annotation scorer.
///
/// This is NOT the proprietary clinical decision-support model; it is an
/// openly documented stand-in with the same input requirements and the same
/// qualitative ordering, used for model-vs-baseline comparisons. Rule table
/// (frozen by regression tests, documented in the README):
///
///   not scorable     unless pn, t2, t3, t5, tB, ICM and TE are all present
///   pn != 2          -> 1.0
///   DC1-3            -> 2.0   (t3 - tPNf < 5 h, when tPNf is annotated)
///   DC2-5            -> 2.5   (t5 - t3 < 5 h)
///   otherwise        -> tB component + ICM bonus + TE bonus
///     tB component: 8.0 for tB <= 96, linear down to 5.0 at tB >= 120
///     grade bonus:  A +0.9, B +0.45, C +0.0 (each of ICM, TE)
///
/// Scores always land in [1.0, 9.9]; later tB never scores higher, and a
/// better ICM or TE grade never scores lower.
inline std::optional<double> baseline_score(const MorphokineticRecord& r) {
  if (!r.pn || !r.t2 || !r.t3 || !r.t5 || !r.tb || !r.icm || !r.te) return std::nullopt;
  if (*r.pn != 2) return 1.0;
  // tPNf is not part of the required inputs; the DC1-3 branch applies only
  // when it happens to be annotated.
  if (r.tpnf && *r.t3 - *r.tpnf < 5.0) return 2.0;
  if (*r.t5 - *r.t3 < 5.0) return 2.5;
  const double tb = *r.tb;
  const double tb_component = 8.0 - 3.0 * std::clamp((tb - 96.0) / 24.0, 0.0, 1.0);
  auto bonus = [](Grade g) {
    switch (g) {
      case Grade::A: return 0.9;
      case Grade::B: return 0.45;
      default: return 0.0;
    }
  };
  return tb_component + bonus(*r.icm) + bonus(*r.te);
}

}  // namespace tles::morpho
