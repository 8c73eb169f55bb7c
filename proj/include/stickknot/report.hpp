#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stickknot/census.hpp"

namespace stickknot {

using ordered_json = nlohmann::ordered_json;

inline std::string labeling_string(const Labeling& l) {
  std::string s;
  for (Vertex v : l) s += std::to_string(v);
  return s;
}

inline std::string triple_string(const Triple& t) {
  std::string s;
  for (Vertex v : t.vertices()) s += std::to_string(v);
  return s;
}

inline ordered_json cycle_json(const CycleRecord& rec) {
  ordered_json j;
  j["cycle"] = rec.cycle.to_string();
  j["class"] = to_string(rec.knot);
  j["determinant"] = rec.determinant;
  j["crossings"] = rec.crossings;
  ordered_json matches = ordered_json::array();
  for (const auto& m : rec.matches)
    matches.push_back({{"type", to_string(m.type)},
                       {"labeling", labeling_string(m.labeling)},
                       {"s", std::string(1, sign_char(m.s))}});
  j["matches"] = std::move(matches);
  j["excluded_by"] = rec.excluded_by ? ordered_json(triple_string(*rec.excluded_by)) : ordered_json(nullptr);
  return j;
}

inline ordered_json verdicts_json(const std::vector<Verdict>& vs) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : vs)
    arr.push_back({{"check", v.check}, {"passed", v.passed}, {"asserted", v.asserted}, {"detail", v.detail}});
  return arr;
}

/// Stable key order; identical input gives byte-identical output.
inline ordered_json report_json(const CensusReport& r, const std::vector<Verdict>& verdicts) {
  ordered_json j;
  j["n"] = r.n;
  j["direction"] = {r.direction.x, r.direction.y, r.direction.z};
  j["cycles"] = r.total();
  j["counts"] = {{"unknot", r.unknot}, {"trefoil", r.trefoil}, {"figure8", r.figure8}};
  j["nontrivial"] = r.nontrivial();
  j["arf_sum_mod2"] = r.arf_sum_mod2;
  ordered_json triples = ordered_json::array();
  for (const auto& t : r.trivial_triples) triples.push_back(triple_string(t));
  j["trivial_triples"] = {{"count", r.trivial_triples.size()},
                          {"list", std::move(triples)},
                          {"excluded_cycles", r.excluded_cycles}};
  ordered_json f8 = ordered_json::array(), tre = ordered_json::array();
  for (const auto* rec : r.of_class(KnotClass::FigureEight)) f8.push_back(cycle_json(*rec));
  for (const auto* rec : r.of_class(KnotClass::Trefoil)) tre.push_back(cycle_json(*rec));
  j["figure8_cycles"] = std::move(f8);
  j["trefoil_cycles"] = std::move(tre);
  j["verdicts"] = verdicts_json(verdicts);
  j["all_pass"] = all_passed(verdicts);
  return j;
}

inline std::string report_text(const CensusReport& r, const std::vector<Verdict>& verdicts) {
  std::ostringstream out;
  out << "K" << r.n << " census: " << r.total() << " Hamiltonian cycles, projection direction ("
      << r.direction.x << "," << r.direction.y << "," << r.direction.z << ")\n";
  out << "unknot " << r.unknot << "  trefoil " << r.trefoil << "  figure8 " << r.figure8
      << "  arf_sum_mod2 " << r.arf_sum_mod2 << "\n";
  out << "trivial triples " << r.trivial_triples.size() << ", cycles excluded by them "
      << r.excluded_cycles << "\n";
  for (const auto* rec : r.of_class(KnotClass::FigureEight)) {
    out << "figure8 <" << rec->cycle.to_string() << "> det " << rec->determinant << " crossings "
        << rec->crossings;
    for (const auto& m : rec->matches)
      out << "  type-" << to_string(m.type) << "@" << labeling_string(m.labeling) << "(s=" << sign_char(m.s) << ")";
    out << "\n";
  }
  for (const auto* rec : r.of_class(KnotClass::Trefoil))
    out << "trefoil <" << rec->cycle.to_string() << "> det " << rec->determinant << " crossings "
        << rec->crossings << "\n";
  for (const auto& v : verdicts)
    out << (v.passed ? "PASS " : (v.asserted ? "FAIL " : "FLAG ")) << v.check << "  " << v.detail
        << (v.asserted ? "" : "  (informational)") << "\n";
  return out.str();
}

inline std::string csv_header() {
  return "index,seed,n,unknot,trefoil,figure8,nontrivial,arf_sum_mod2,trivial_triples,excluded_cycles,"
         "figure8_types,all_pass";
}

inline std::string csv_row(std::size_t index, std::uint64_t seed, const CensusReport& r,
                           const std::vector<Verdict>& verdicts) {
  std::string types;
  for (auto t : r.figure8_types()) types += std::string(types.empty() ? "" : "|") + to_string(t);
  std::ostringstream out;
  out << index << ',' << seed << ',' << r.n << ',' << r.unknot << ',' << r.trefoil << ',' << r.figure8
      << ',' << r.nontrivial() << ',' << r.arf_sum_mod2 << ',' << r.trivial_triples.size() << ','
      << r.excluded_cycles << ',' << types << ',' << (all_passed(verdicts) ? 1 : 0);
  return out.str();
}

}  // namespace stickknot
