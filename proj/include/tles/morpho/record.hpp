#pragma once

#include <optional>
#include <string>

#include "tles/core/error.hpp"

namespace tles::morpho {

enum class Grade { A, B, C };

inline std::string grade_name(Grade g) {
  switch (g) {
    case Grade::A: return "A";
    case Grade::B: return "B";
    default: return "C";
  }
}

inline Grade grade_from_name(const std::string& s) {
  if (s == "A") return Grade::A;
  if (s == "B") return Grade::B;
  if (s == "C") return Grade::C;
  throw Error("MANIFEST_PARSE", "unknown grade: " + s);
}

/// Timed developmental events and blastocyst grades. Any field may be absent.
struct MorphokineticRecord {
  std::optional<int> pn;          // pronuclei count
  std::optional<double> tpnf;     // pronuclei fading, hpi
  std::optional<double> t2;       // cleavage to 2 blastomeres
  std::optional<double> t3;       // 3 blastomeres
  std::optional<double> t5;       // 5 blastomeres
  std::optional<double> tb;       // full blastocyst
  std::optional<Grade> icm;       // inner cell mass grade
  std::optional<Grade> te;        // trophectoderm grade

  bool any_present() const {
    return pn || tpnf || t2 || t3 || t5 || tb || icm || te;
  }
};

/// Present timings must be positive and ordered tPNf <= t2 <= t3 <= t5 <= tB
/// (each inequality checked only when both endpoints are present).
inline void validate(const MorphokineticRecord& r) {
  auto positive = [](const std::optional<double>& v, const char* name) {
    if (v && *v <= 0.0) throw Error("ANNOTATION_INVALID", std::string(name) + " must be > 0");
  };
  positive(r.tpnf, "tPNf");
  positive(r.t2, "t2");
  positive(r.t3, "t3");
  positive(r.t5, "t5");
  positive(r.tb, "tB");
  auto ordered = [](const std::optional<double>& a, const std::optional<double>& b,
                    const char* msg) {
    if (a && b && *a > *b) throw Error("ANNOTATION_INVALID", msg);
  };
  ordered(r.tpnf, r.t2, "tPNf > t2");
  ordered(r.t2, r.t3, "t2 > t3");
  ordered(r.t3, r.t5, "t3 > t5");
  ordered(r.t5, r.tb, "t5 > tB");
  if (r.pn && *r.pn < 0) throw Error("ANNOTATION_INVALID", "pn must be >= 0");
}

}  // namespace tles::morpho
