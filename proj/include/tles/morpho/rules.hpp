#pragma once

#include <string>

#include "tles/morpho/record.hpp"

namespace tles::morpho {

enum class CleavagePattern { no_dc, dc1_3, dc2_5, undetermined };

inline std::string cleavage_name(CleavagePattern p) {
  switch (p) {
    case CleavagePattern::no_dc: return "no-DC";
    case CleavagePattern::dc1_3: return "DC1-3";
    case CleavagePattern::dc2_5: return "DC2-5";
    default: return "undetermined";
  }
}

/// Direct-cleavage classification. Requires tPNf, t3 and t5 all annotated;
/// thresholds are strict (a difference of exactly 5.0 h is not direct
/// cleavage). DC1-3 takes precedence when both inequalities hold.
inline CleavagePattern classify_direct_cleavage(const MorphokineticRecord& r) {
  if (!r.tpnf || !r.t3 || !r.t5) return CleavagePattern::undetermined;
  if (*r.t3 - *r.tpnf < 5.0) return CleavagePattern::dc1_3;
  if (*r.t5 - *r.t3 < 5.0) return CleavagePattern::dc2_5;
  return CleavagePattern::no_dc;
}

enum class TbGroup { under_100, g100_105, g105_110, g110_115, over_115, absent };

inline std::string tb_group_name(TbGroup g) {
  switch (g) {
    case TbGroup::under_100: return "<100";
    case TbGroup::g100_105: return "100-105";
    case TbGroup::g105_110: return "105-110";
    case TbGroup::g110_115: return "110-115";
    case TbGroup::over_115: return ">115";
    default: return "absent";
  }
}

/// Time-to-blastocyst bins. Interior bins are half-open, lower-inclusive:
/// [100, 105), [105, 110), [110, 115); 105.0 therefore falls in "105-110".
inline TbGroup tb_group(const MorphokineticRecord& r) {
  if (!r.tb) return TbGroup::absent;
  const double tb = *r.tb;
  if (tb < 100.0) return TbGroup::under_100;
  if (tb < 105.0) return TbGroup::g100_105;
  if (tb < 110.0) return TbGroup::g105_110;
  if (tb < 115.0) return TbGroup::g110_115;
  return TbGroup::over_115;
}

}  // namespace tles::morpho
