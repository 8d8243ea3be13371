#pragma once

#include <json.hpp>

#include "amoeba/derived.hpp"
#include "amoeba/partition.hpp"
#include "amoeba/subset.hpp"
#include "amoeba/verify.hpp"

namespace amoeba {

using Json = nlohmann::ordered_json;

/// 1-based element list, ascending: {0,2} -> [1,3].
inline Json mask_to_json(const SubsetMask& s) {
  Json arr = Json::array();
  s.for_each([&](int e) { arr.push_back(e + 1); });
  return arr;
}

/// Array of arrays of 1-based indices, parts in canonical order,
/// e.g. [[1,2,5,6],[3],[4],[7]].
inline Json partition_to_json(const Partition& p) {
  Json arr = Json::array();
  for (const auto& part : p.parts()) arr.push_back(mask_to_json(part));
  return arr;
}

inline Partition partition_from_json(const Json& j, int ground_size) {
  std::vector<SubsetMask> parts;
  for (const auto& part : j) {
    SubsetMask mask = SubsetMask::empty(ground_size);
    for (const auto& e : part) mask = mask.with(e.get<int>() - 1);
    parts.push_back(mask);
  }
  return Partition(std::move(parts), ground_size);
}

inline Json axiom_report_to_json(const AxiomReport& report, Json bell_counts) {
  Json j;
  j["checks_run"] = report.checks_run;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json entry;
    entry["axiom"] = f.axiom;
    entry["S"] = mask_to_json(f.s);
    entry["T"] = mask_to_json(f.t);
    entry["values"] = f.values;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  j["bell_counts"] = std::move(bell_counts);
  return j;
}

inline Json result_to_json(const OptimalPartitionResult& r) {
  Json j;
  j["dim"] = r.rprime;
  j["partition"] = partition_to_json(r.partition);
  j["basis"] = mask_to_json(r.basis);
  j["rank_calls"] = r.rank_calls;
  return j;
}

}  // namespace amoeba
