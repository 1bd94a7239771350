#pragma once

#include <string>
#include <vector>

#include "tles/cohort/types.hpp"
#include "tles/core/io.hpp"

namespace tles::cohort {

// Cohort manifest: UTF-8 line-delimited JSON, one embryo per line. Field
// names are fixed; absent values are encoded as JSON null. Transfer events
// travel in a second line-delimited file keyed by treatment_id.

namespace detail {

inline json opt_num(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
inline json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

inline std::optional<double> num_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

inline std::optional<int> int_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

inline std::string str_or(const json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return j.at(key).get<std::string>();
}

}  // namespace detail

inline json annotations_to_json(const morpho::MorphokineticRecord& a) {
  using detail::opt_num;
  json j;
  j["pn"] = detail::opt_int(a.pn);
  j["tPNf"] = opt_num(a.tpnf);
  j["t2"] = opt_num(a.t2);
  j["t3"] = opt_num(a.t3);
  j["t5"] = opt_num(a.t5);
  j["tB"] = opt_num(a.tb);
  j["icm"] = a.icm ? json(morpho::grade_name(*a.icm)) : json(nullptr);
  j["te"] = a.te ? json(morpho::grade_name(*a.te)) : json(nullptr);
  return j;
}

inline morpho::MorphokineticRecord annotations_from_json(const json& j) {
  morpho::MorphokineticRecord a;
  a.pn = detail::int_opt(j, "pn");
  a.tpnf = detail::num_opt(j, "tPNf");
  a.t2 = detail::num_opt(j, "t2");
  a.t3 = detail::num_opt(j, "t3");
  a.t5 = detail::num_opt(j, "t5");
  a.tb = detail::num_opt(j, "tB");
  if (j.contains("icm") && !j.at("icm").is_null())
    a.icm = morpho::grade_from_name(j.at("icm").get<std::string>());
  if (j.contains("te") && !j.at("te").is_null())
    a.te = morpho::grade_from_name(j.at("te").get<std::string>());
  return a;
}

inline json record_to_json(const EmbryoRecord& r) {
  json j;
  j["embryo_id"] = r.embryo_id;
  j["clinic_id"] = r.clinic_id;
  j["treatment_id"] = r.treatment_id;
  j["female_age"] = detail::opt_int(r.female_age);
  switch (r.insemination) {
    case Insemination::ivf: j["insemination"] = "IVF"; break;
    case Insemination::icsi: j["insemination"] = "ICSI"; break;
    default: j["insemination"] = nullptr;
  }
  switch (r.incubation_day) {
    case IncubationDay::d5: j["incubation_day"] = "D5"; break;
    case IncubationDay::d6: j["incubation_day"] = "D6"; break;
    default: j["incubation_day"] = nullptr;
  }
  switch (r.transfer_protocol) {
    case TransferProtocol::fresh: j["transfer_protocol"] = "fresh"; break;
    case TransferProtocol::cryopreserved: j["transfer_protocol"] = "cryopreserved"; break;
    default: j["transfer_protocol"] = "not_transferred";
  }
  j["transferred"] = r.transferred;
  j["outcome"] = outcome_name(r.outcome);
  switch (r.neg_provenance) {
    case NegProvenance::transferred_negative: j["neg_provenance"] = "transferred_negative"; break;
    case NegProvenance::discarded: j["neg_provenance"] = "discarded"; break;
    default: j["neg_provenance"] = nullptr;
  }
  j["kid"] = r.kid;
  j["sequence_ref"] = r.sequence_ref.empty() ? json(nullptr) : json(r.sequence_ref);
  j["annotations"] = r.annotations ? annotations_to_json(*r.annotations) : json(nullptr);
  return j;
}

inline EmbryoRecord record_from_json(const json& j) {
  EmbryoRecord r;
  r.embryo_id = j.at("embryo_id").get<std::string>();
  r.clinic_id = detail::str_or(j, "clinic_id", "");
  r.treatment_id = detail::str_or(j, "treatment_id", "");
  r.female_age = detail::int_opt(j, "female_age");
  const std::string ins = detail::str_or(j, "insemination", "");
  r.insemination = ins == "IVF"    ? Insemination::ivf
                   : ins == "ICSI" ? Insemination::icsi
                                   : Insemination::unknown;
  const std::string day = detail::str_or(j, "incubation_day", "");
  r.incubation_day = day == "D5"   ? IncubationDay::d5
                     : day == "D6" ? IncubationDay::d6
                                   : IncubationDay::unknown;
  const std::string proto = detail::str_or(j, "transfer_protocol", "not_transferred");
  r.transfer_protocol = proto == "fresh"           ? TransferProtocol::fresh
                        : proto == "cryopreserved" ? TransferProtocol::cryopreserved
                                                   : TransferProtocol::not_transferred;
  r.transferred = j.value("transferred", false);
  const std::string out = detail::str_or(j, "outcome", "PENDING");
  r.outcome = out == "FH_POS"    ? Outcome::fh_pos
              : out == "FH_NEG"  ? Outcome::fh_neg
              : out == "UNKNOWN" ? Outcome::unknown
                                 : Outcome::pending;
  const std::string prov = detail::str_or(j, "neg_provenance", "");
  r.neg_provenance = prov == "transferred_negative" ? NegProvenance::transferred_negative
                     : prov == "discarded"          ? NegProvenance::discarded
                                                    : NegProvenance::none;
  r.kid = j.value("kid", false);
  r.sequence_ref = detail::str_or(j, "sequence_ref", "");
  if (j.contains("annotations") && !j.at("annotations").is_null())
    r.annotations = annotations_from_json(j.at("annotations"));
  return r;
}

inline json event_to_json(const TransferEvent& e) {
  json j;
  j["treatment_id"] = e.treatment_id;
  j["embryo_ids"] = e.embryo_ids;
  j["num_fetal_heartbeats"] = detail::opt_int(e.num_fetal_heartbeats);
  j["discarded_ids"] = e.discarded_ids;
  j["protocol"] = e.protocol == TransferProtocol::cryopreserved ? "cryopreserved" : "fresh";
  return j;
}

inline TransferEvent event_from_json(const json& j) {
  TransferEvent e;
  e.treatment_id = j.at("treatment_id").get<std::string>();
  if (j.contains("embryo_ids") && !j.at("embryo_ids").is_null())
    e.embryo_ids = j.at("embryo_ids").get<std::vector<std::string>>();
  e.num_fetal_heartbeats = detail::int_opt(j, "num_fetal_heartbeats");
  if (j.contains("discarded_ids") && !j.at("discarded_ids").is_null())
    e.discarded_ids = j.at("discarded_ids").get<std::vector<std::string>>();
  e.protocol = detail::str_or(j, "protocol", "fresh") == "cryopreserved"
                   ? TransferProtocol::cryopreserved
                   : TransferProtocol::fresh;
  return e;
}

/// Guard against training on generator ground truth: any record carrying a
/// latent-viability style field is rejected wherever embryo records are read.
inline void reject_truth_records(const json& j, const std::string& path) {
  require(!j.contains("latent_viability") && !j.contains("true_events"), "TRUTH_LEAK",
          path + " contains ground-truth fields and must not enter the pipeline");
}

inline std::vector<EmbryoRecord> read_manifest(const fs::path& path) {
  std::vector<EmbryoRecord> records;
  for (const auto& j : read_jsonl(path)) {
    reject_truth_records(j, path.string());
    records.push_back(record_from_json(j));
  }
  return records;
}

inline void write_manifest(const fs::path& path, const std::vector<EmbryoRecord>& records) {
  std::vector<json> lines;
  lines.reserve(records.size());
  for (const auto& r : records) lines.push_back(record_to_json(r));
  write_jsonl(path, lines);
}

inline std::vector<TransferEvent> read_events(const fs::path& path) {
  std::vector<TransferEvent> events;
  for (const auto& j : read_jsonl(path)) events.push_back(event_from_json(j));
  return events;
}

inline void write_events(const fs::path& path, const std::vector<TransferEvent>& events) {
  std::vector<json> lines;
  lines.reserve(events.size());
  for (const auto& e : events) lines.push_back(event_to_json(e));
  write_jsonl(path, lines);
}

inline json split_to_json(const DatasetSplit& s) {
  json j;
  j["seed"] = s.seed;
  j["train_ids"] = s.train_ids;
  j["test_ids"] = s.test_ids;
  return j;
}

inline DatasetSplit split_from_json(const json& j) {
  DatasetSplit s;
  s.seed = j.value("seed", 0ULL);
  s.train_ids = j.at("train_ids").get<std::vector<std::string>>();
  s.test_ids = j.at("test_ids").get<std::vector<std::string>>();
  return s;
}

}  // namespace tles::cohort
