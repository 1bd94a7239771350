#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tles/cohort/types.hpp"
#include "tles/core/rng.hpp"

namespace tles::cohort {

/// Outcome labeling over transfer events:
///   heartbeats == transferred count -> every embryo of the event FH+
///   heartbeats == 0                 -> every embryo FH- (transferred_negative)
///   0 < heartbeats < count          -> every embryo UNKNOWN
///   heartbeats unrecorded           -> every embryo UNKNOWN
///   discarded                       -> FH- (discarded)
///   untransferred, undiscarded      -> PENDING
/// The kid flag marks transferred embryos with a definite outcome.
inline std::vector<EmbryoRecord> label_outcomes(const std::vector<TransferEvent>& events,
                                                std::vector<EmbryoRecord> embryos) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < embryos.size(); ++i) {
    auto [it, inserted] = index.emplace(embryos[i].embryo_id, i);
    require(inserted, "RECORD_INVALID", "duplicate embryo_id: " + embryos[i].embryo_id);
    (void)it;
  }

  // Reset label state so relabeling is idempotent.
  for (auto& e : embryos) {
    e.transferred = false;
    e.outcome = Outcome::pending;
    e.neg_provenance = NegProvenance::none;
    e.kid = false;
    e.transfer_protocol = TransferProtocol::not_transferred;
  }

  std::set<std::string> seen_transferred, seen_discarded;
  for (const auto& event : events) {
    validate(event);
    for (const auto& id : event.embryo_ids) {
      require(index.count(id), "EVENT_UNKNOWN_EMBRYO",
              "transfer event references missing embryo: " + id);
      require(seen_transferred.insert(id).second, "EVENT_CONFLICT",
              "embryo in more than one transfer: " + id);
    }
    for (const auto& id : event.discarded_ids) {
      require(index.count(id), "EVENT_UNKNOWN_EMBRYO",
              "discard entry references missing embryo: " + id);
      require(seen_discarded.insert(id).second, "EVENT_CONFLICT",
              "embryo discarded more than once: " + id);
    }
  }
  for (const auto& id : seen_transferred) {
    require(!seen_discarded.count(id), "EVENT_CONFLICT",
            "embryo both transferred and discarded: " + id);
  }

  for (const auto& event : events) {
    const long count = static_cast<long>(event.embryo_ids.size());
    Outcome label = Outcome::unknown;
    if (event.num_fetal_heartbeats) {
      const long fh = *event.num_fetal_heartbeats;
      if (fh == count)
        label = Outcome::fh_pos;
      else if (fh == 0)
        label = Outcome::fh_neg;
      else
        label = Outcome::unknown;
    }
    for (const auto& id : event.embryo_ids) {
      EmbryoRecord& rec = embryos[index.at(id)];
      rec.transferred = true;
      rec.transfer_protocol = event.protocol;
      rec.outcome = label;
      rec.neg_provenance =
          label == Outcome::fh_neg ? NegProvenance::transferred_negative : NegProvenance::none;
      rec.kid = label == Outcome::fh_pos || label == Outcome::fh_neg;
    }
    for (const auto& id : event.discarded_ids) {
      EmbryoRecord& rec = embryos[index.at(id)];
      rec.outcome = Outcome::fh_neg;
      rec.neg_provenance = NegProvenance::discarded;
    }
  }
  return embryos;
}

struct DatasetCounts {
  long fh_pos = 0;
  long fh_neg_transferred = 0;
  long fh_neg_discarded = 0;
  long unknown = 0;
  long pending = 0;
  long labeled() const { return fh_pos + fh_neg_transferred + fh_neg_discarded; }
  long total() const { return labeled() + unknown + pending; }
};

inline DatasetCounts count_outcomes(const std::vector<EmbryoRecord>& embryos) {
  DatasetCounts c;
  for (const auto& e : embryos) {
    switch (e.outcome) {
      case Outcome::fh_pos: ++c.fh_pos; break;
      case Outcome::fh_neg:
        (e.neg_provenance == NegProvenance::discarded ? c.fh_neg_discarded
                                                      : c.fh_neg_transferred)++;
        break;
      case Outcome::unknown: ++c.unknown; break;
      case Outcome::pending: ++c.pending; break;
    }
  }
  return c;
}

/// Keeps exactly the FH+ and FH- embryos; unknown and pending drop out.
inline std::vector<EmbryoRecord> build_dataset(const std::vector<EmbryoRecord>& embryos) {
  std::vector<EmbryoRecord> labeled;
  for (const auto& e : embryos)
    if (e.outcome == Outcome::fh_pos || e.outcome == Outcome::fh_neg) labeled.push_back(e);
  require(!labeled.empty(), "DATASET_EMPTY", "no FH+/FH- embryos after labeling");
  return labeled;
}

/// Random split at embryo granularity (siblings of one treatment may land on
/// opposite sides): canonical id order, seeded shuffle, cut at
/// round(fraction * n) clamped so neither side is empty.
inline DatasetSplit split_dataset(const std::vector<EmbryoRecord>& embryos, double fraction,
                                  std::uint64_t seed) {
  require(fraction > 0.0 && fraction < 1.0, "SPLIT_FRACTION", "fraction must be in (0,1)");
  require(embryos.size() >= 2, "SPLIT_TOO_FEW", "need at least 2 embryos to split");
  std::vector<std::string> ids;
  ids.reserve(embryos.size());
  for (const auto& e : embryos) ids.push_back(e.embryo_id);
  std::sort(ids.begin(), ids.end());
  Rng rng = derive_rng(seed, "dataset-split");
  for (std::size_t i = ids.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)));
    std::swap(ids[i], ids[j]);
  }
  const long n = static_cast<long>(ids.size());
  long n_train = std::llround(fraction * static_cast<double>(n));
  n_train = std::clamp(n_train, 1L, n - 1);
  DatasetSplit split;
  split.seed = seed;
  split.train_ids.assign(ids.begin(), ids.begin() + n_train);
  split.test_ids.assign(ids.begin() + n_train, ids.end());
  std::sort(split.train_ids.begin(), split.train_ids.end());
  std::sort(split.test_ids.begin(), split.test_ids.end());
  return split;
}

/// Grouped variant: all embryos of one treatment stay on the same side.
/// Off by default everywhere; provided for sensitivity checks.
inline DatasetSplit split_dataset_grouped(const std::vector<EmbryoRecord>& embryos,
                                          double fraction, std::uint64_t seed) {
  require(fraction > 0.0 && fraction < 1.0, "SPLIT_FRACTION", "fraction must be in (0,1)");
  require(embryos.size() >= 2, "SPLIT_TOO_FEW", "need at least 2 embryos to split");
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& e : embryos) groups[e.treatment_id].push_back(e.embryo_id);
  std::vector<std::string> keys;
  for (const auto& [k, v] : groups) keys.push_back(k);
  Rng rng = derive_rng(seed, "dataset-split-grouped");
  for (std::size_t i = keys.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)));
    std::swap(keys[i], keys[j]);
  }
  const long target = std::llround(fraction * static_cast<double>(embryos.size()));
  DatasetSplit split;
  split.seed = seed;
  long assigned = 0;
  for (const auto& k : keys) {
    auto& dst = assigned < target ? split.train_ids : split.test_ids;
    for (const auto& id : groups[k]) dst.push_back(id);
    if (assigned < target) assigned += static_cast<long>(groups[k].size());
  }
  if (split.test_ids.empty() && split.train_ids.size() > 1) {
    split.test_ids.push_back(split.train_ids.back());
    split.train_ids.pop_back();
  }
  std::sort(split.train_ids.begin(), split.train_ids.end());
  std::sort(split.test_ids.begin(), split.test_ids.end());
  return split;
}

}  // namespace tles::cohort
