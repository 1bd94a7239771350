#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tles/core/error.hpp"
#include "tles/morpho/record.hpp"

namespace tles::cohort {

enum class Insemination { ivf, icsi, unknown };
enum class IncubationDay { d5, d6, unknown };
enum class TransferProtocol { fresh, cryopreserved, not_transferred };
enum class Outcome { fh_pos, fh_neg, unknown, pending };

/// How an FH- label arose: a failed transfer or a deselection/discard. The
/// trainer samples the two routes differently.
enum class NegProvenance { none, transferred_negative, discarded };

inline std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::fh_pos: return "FH_POS";
    case Outcome::fh_neg: return "FH_NEG";
    case Outcome::unknown: return "UNKNOWN";
    default: return "PENDING";
  }
}

struct EmbryoRecord {
  std::string embryo_id;
  std::string clinic_id;
  std::string treatment_id;
  std::optional<int> female_age;  // years, 18..52 when present
  Insemination insemination = Insemination::unknown;
  IncubationDay incubation_day = IncubationDay::unknown;
  TransferProtocol transfer_protocol = TransferProtocol::not_transferred;
  bool transferred = false;
  Outcome outcome = Outcome::pending;
  NegProvenance neg_provenance = NegProvenance::none;
  bool kid = false;  // transferred with known outcome
  std::string sequence_ref;  // per-embryo sequence directory, relative to the manifest
  std::optional<morpho::MorphokineticRecord> annotations;
};

struct TransferEvent {
  std::string treatment_id;
  std::vector<std::string> embryo_ids;              // transferred together
  std::optional<int> num_fetal_heartbeats;          // observed on ultrasound
  std::vector<std::string> discarded_ids;           // deselected in this treatment
  TransferProtocol protocol = TransferProtocol::fresh;  // fresh or cryopreserved transfer
};

struct DatasetSplit {
  std::vector<std::string> train_ids;  // sorted
  std::vector<std::string> test_ids;   // sorted
  std::uint64_t seed = 0;
};

inline void validate(const EmbryoRecord& r) {
  require(!r.embryo_id.empty(), "RECORD_INVALID", "empty embryo_id");
  if (r.female_age) {
    require(*r.female_age >= 18 && *r.female_age <= 52, "RECORD_INVALID",
            r.embryo_id + ": female_age out of [18, 52]");
  }
  if (r.kid) {
    require(r.transferred && (r.outcome == Outcome::fh_pos || r.outcome == Outcome::fh_neg),
            "RECORD_INVALID", r.embryo_id + ": kid requires transfer with known outcome");
  }
  if (!r.transferred) {
    require(r.transfer_protocol == TransferProtocol::not_transferred, "RECORD_INVALID",
            r.embryo_id + ": untransferred embryo with a transfer protocol");
  }
  if (r.outcome == Outcome::pending) {
    require(!r.transferred, "RECORD_INVALID", r.embryo_id + ": transferred embryo cannot be pending");
  }
  if (r.annotations) morpho::validate(*r.annotations);
}

inline void validate(const TransferEvent& e) {
  require(!e.treatment_id.empty(), "RECORD_INVALID", "transfer event without treatment_id");
  require(e.protocol != TransferProtocol::not_transferred, "RECORD_INVALID",
          e.treatment_id + ": transfer event needs a fresh or cryopreserved protocol");
  if (e.num_fetal_heartbeats) {
    require(*e.num_fetal_heartbeats >= 0, "RECORD_INVALID", "negative fetal heartbeat count");
    require(static_cast<std::size_t>(*e.num_fetal_heartbeats) <= e.embryo_ids.size(),
            "RECORD_INVALID",
            e.treatment_id + ": more heartbeats than transferred embryos");
  }
}

}  // namespace tles::cohort
