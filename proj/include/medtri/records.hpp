#pragma once

// JSONL record schema and run manifest. One object per triangle, fixed key
// order, compact encoding: identical inputs produce byte-identical files.
// heron16 is carried as a decimal string since it outgrows 64-bit range.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "medtri/search.hpp"

namespace medtri {

using ordered_json = nlohmann::ordered_json;

inline const char* area_class_name(AreaClass a) {
  switch (a) {
    case AreaClass::Integer: return "integer";
    case AreaClass::Rational: return "rational";
    case AreaClass::Irrational: return "irrational";
  }
  return "?";
}

inline AreaClass area_class_from_name(const std::string& name) {
  if (name == "integer") return AreaClass::Integer;
  if (name == "rational") return AreaClass::Rational;
  if (name == "irrational") return AreaClass::Irrational;
  throw std::runtime_error("unknown area class: " + name);
}

inline ordered_json record_to_json(const CertifiedMedianTriangle& r) {
  ordered_json j;
  j["a"] = to_i64(r.a, "side a");
  j["b"] = to_i64(r.b, "side b");
  j["c"] = to_i64(r.c, "side c");
  j["ma"] = to_i64(r.m_a, "median ma");
  j["mb"] = to_i64(r.m_b, "median mb");
  j["mc"] = to_i64(r.m_c, "median mc");
  j["heron16"] = r.heron16_value.str();
  j["area_class"] = area_class_name(r.area);
  j["mod3"] = ordered_json{{"sides", r.side_mod3}, {"medians", r.median_mod3},
                           {"sum_sq", r.sum_sq_mod3}};
  j["audits"] = ordered_json{{"eight_conditions", r.eight_conditions_ok},
                             {"t_zero", r.t_zero_ok},
                             {"lemma2", r.lemma2_ok},
                             {"nonsimilar_companion", r.nonsimilar_companion_ok}};
  j["primitive"] = {to_i64(r.primitive[0]), to_i64(r.primitive[1]), to_i64(r.primitive[2])};
  return j;
}

inline CertifiedMedianTriangle record_from_json(const ordered_json& j) {
  CertifiedMedianTriangle r;
  r.a = j.at("a").get<std::int64_t>();
  r.b = j.at("b").get<std::int64_t>();
  r.c = j.at("c").get<std::int64_t>();
  r.m_a = j.at("ma").get<std::int64_t>();
  r.m_b = j.at("mb").get<std::int64_t>();
  r.m_c = j.at("mc").get<std::int64_t>();
  r.heron16_value = BigInt(j.at("heron16").get<std::string>());
  r.area = area_class_from_name(j.at("area_class").get<std::string>());
  const auto& mod3 = j.at("mod3");
  r.side_mod3 = mod3.at("sides").get<std::array<int, 3>>();
  r.median_mod3 = mod3.at("medians").get<std::array<int, 3>>();
  r.sum_sq_mod3 = mod3.at("sum_sq").get<int>();
  const auto& audits = j.at("audits");
  r.eight_conditions_ok = audits.at("eight_conditions").get<bool>();
  r.t_zero_ok = audits.at("t_zero").get<bool>();
  r.lemma2_ok = audits.at("lemma2").get<bool>();
  r.nonsimilar_companion_ok = audits.at("nonsimilar_companion").get<bool>();
  const auto prim = j.at("primitive").get<std::array<std::int64_t, 3>>();
  r.primitive = {BigInt(prim[0]), BigInt(prim[1]), BigInt(prim[2])};
  return r;
}

inline std::string record_to_line(const CertifiedMedianTriangle& r) {
  return record_to_json(r).dump();
}

inline void write_records(const std::string& path,
                          const std::vector<CertifiedMedianTriangle>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& r : records) out << record_to_line(r) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::vector<CertifiedMedianTriangle> read_records(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<CertifiedMedianTriangle> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(record_from_json(ordered_json::parse(line)));
  }
  return records;
}

struct RunManifest {
  std::string tool = "medtri";
  std::string version;
  std::int64_t max_side = 0;
  int shards = 1;
  std::string even_filter_mode;  // "auto" or "off"
  bool even_filter_used = false;
  std::int64_t calibration_bound = 0;  // 0 when no calibration scan ran
  std::string output_path;
  std::uint64_t triples_scanned = 0;
  std::uint64_t hits = 0;
  std::uint64_t counterexamples = 0;
  double wall_seconds = 0.0;
};

inline ordered_json manifest_to_json(const RunManifest& m) {
  ordered_json j;
  j["tool"] = m.tool;
  j["version"] = m.version;
  j["config"] = ordered_json{{"max_side", m.max_side},
                             {"shards", m.shards},
                             {"even_filter", m.even_filter_mode},
                             {"out", m.output_path}};
  j["even_filter_used"] = m.even_filter_used;
  j["calibration_bound"] = m.calibration_bound;
  j["counts"] = ordered_json{{"triples_scanned", m.triples_scanned},
                             {"hits", m.hits},
                             {"counterexamples", m.counterexamples}};
  j["wall_seconds"] = m.wall_seconds;
  return j;
}

inline void write_manifest(const std::string& path, const RunManifest& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << manifest_to_json(m).dump(2) << '\n';
}

}  // namespace medtri
