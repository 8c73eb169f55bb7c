#pragma once

// Classification of every Hamiltonian cycle of a linearly embedded K6 or K7,
// and the checks that the resulting counts must satisfy.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stickknot/cycle.hpp"
#include "stickknot/diagram.hpp"
#include "stickknot/epsilon_cache.hpp"
#include "stickknot/reduction.hpp"
#include "stickknot/tables.hpp"

namespace stickknot {

/// n!/(2n) canonical cycles (first vertex 1, second < last) in
/// lexicographic order.
inline std::vector<Cycle> hamiltonian_cycles(std::size_t n) {
  if (n != 6 && n != 7) throw PreconditionError("hamiltonian_cycles supports n = 6 or 7");
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<Cycle> out;
  do {
    if (rest.front() > rest.back()) continue;
    std::vector<Vertex> seq{1};
    seq.insert(seq.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(seq));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

struct CycleRecord {
  Cycle cycle;
  long long determinant = 1;
  std::size_t crossings = 0;
  KnotClass knot = KnotClass::Unknot;
  /// Every (labeling, type) match over the 14 labelings; heptagons only.
  std::vector<TableMatch> matches;
  std::optional<Triple> excluded_by;

  bool matches_type(TableType t) const {
    return std::any_of(matches.begin(), matches.end(), [&](const TableMatch& m) { return m.type == t; });
  }
};

struct CensusReport {
  std::size_t n = 0;
  Direction direction{};
  std::size_t unknot = 0, trefoil = 0, figure8 = 0;
  int arf_sum_mod2 = 0;
  bool tables_evaluated = false;
  std::vector<Triple> trivial_triples;
  std::size_t excluded_cycles = 0;
  std::vector<CycleRecord> cycles;

  std::size_t total() const { return unknot + trefoil + figure8; }
  std::size_t nontrivial() const { return trefoil + figure8; }

  std::vector<const CycleRecord*> of_class(KnotClass k) const {
    std::vector<const CycleRecord*> out;
    for (const auto& r : cycles)
      if (r.knot == k) out.push_back(&r);
    return out;
  }

  /// Cycles where the table test and the determinant classifier disagree.
  std::vector<const CycleRecord*> table_disagreements() const {
    std::vector<const CycleRecord*> out;
    if (!tables_evaluated) return out;
    for (const auto& r : cycles)
      if ((r.knot == KnotClass::FigureEight) != !r.matches.empty()) out.push_back(&r);
    return out;
  }

  /// Figure-8 cycles that contain a consecutive trivial triple.
  std::vector<const CycleRecord*> exclusion_violations() const {
    std::vector<const CycleRecord*> out;
    for (const auto& r : cycles)
      if (r.excluded_by && r.knot == KnotClass::FigureEight) out.push_back(&r);
    return out;
  }

  std::set<TableType> figure8_types() const {
    std::set<TableType> out;
    for (const auto& r : cycles)
      if (r.knot == KnotClass::FigureEight)
        for (const auto& m : r.matches) out.insert(m.type);
    return out;
  }
};

struct CensusOptions {
  bool tables = true;    // 14-labeling pattern sweep per heptagon
  bool triples = true;   // trivial-triple exclusion statistics
};

inline CensusReport run_census(const Configuration& c, CensusOptions opts = {}) {
  const std::size_t n = c.size();
  if (n != 6 && n != 7) throw PreconditionError("census needs a 6- or 7-point configuration");
  static const std::vector<Cycle> cycles6 = hamiltonian_cycles(6);
  static const std::vector<Cycle> cycles7 = hamiltonian_cycles(7);
  const auto& cycles = n == 7 ? cycles7 : cycles6;

  const Projection proj = generic_projection(c);
  std::optional<EpsilonCache> eps;
  if (opts.tables || opts.triples) eps.emplace(c);

  CensusReport r;
  r.n = n;
  r.direction = proj.direction();
  r.tables_evaluated = opts.tables && n == 7;
  std::set<Triple> triples;
  if (opts.triples) {
    triples = trivial_triples(*eps, n);
    r.trivial_triples.assign(triples.begin(), triples.end());
  }
  r.cycles.reserve(cycles.size());
  for (const auto& cycle : cycles) {
    CycleRecord rec;
    rec.cycle = cycle;
    const PlanarDiagram pd = proj.planar_diagram(cycle);
    rec.crossings = pd.crossings.size();
    rec.determinant = knot_determinant(pd);
    rec.knot = class_from_determinant(rec.determinant);
    if (r.tables_evaluated) rec.matches = all_table_matches(*eps, cycle);
    if (opts.triples) {
      rec.excluded_by = consecutive_trivial_triple(cycle, triples);
      if (rec.excluded_by) ++r.excluded_cycles;
    }
    switch (rec.knot) {
      case KnotClass::Unknot: ++r.unknot; break;
      case KnotClass::Trefoil: ++r.trefoil; break;
      case KnotClass::FigureEight: ++r.figure8; break;
    }
    r.arf_sum_mod2 ^= arf(rec.determinant);
    r.cycles.push_back(std::move(rec));
  }
  return r;
}

struct Verdict {
  std::string check;
  bool passed = true;
  /// Informational verdicts are reported but never count as failures.
  bool asserted = true;
  std::string detail;
};

inline bool all_passed(const std::vector<Verdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.passed || !v.asserted; });
}

/// Global bounds: for K7 at most three figure-8 cycles, at least one
/// nontrivial cycle and an odd Arf sum; for K6 at most one trefoil and no
/// figure-8.
inline std::vector<Verdict> verify_bounds(const CensusReport& r) {
  std::vector<Verdict> out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, true, std::move(detail)});
  };
  if (r.n == 7) {
    add("figure8_at_most_3", r.figure8 <= 3, "figure8=" + std::to_string(r.figure8));
    add("nontrivial_at_least_1", r.nontrivial() >= 1, "nontrivial=" + std::to_string(r.nontrivial()));
    add("arf_sum_odd", r.arf_sum_mod2 == 1, "arf_sum_mod2=" + std::to_string(r.arf_sum_mod2));
  } else if (r.n == 6) {
    add("trefoil_at_most_1", r.trefoil <= 1, "trefoil=" + std::to_string(r.trefoil));
    add("no_figure8_in_k6", r.figure8 == 0, "figure8=" + std::to_string(r.figure8));
  }
  return out;
}

/// Internal agreement between the independent routes in one report.
inline std::vector<Verdict> verify_consistency(const CensusReport& r) {
  std::vector<Verdict> out;
  const std::size_t expected = r.n == 7 ? 360 : r.n == 6 ? 60 : 0;
  out.push_back({"cycle_count", r.total() == expected && r.cycles.size() == expected, true,
                 "classified=" + std::to_string(r.total())});
  if (r.tables_evaluated) {
    const auto bad = r.table_disagreements();
    std::string detail = "disagreements=" + std::to_string(bad.size());
    for (const auto* rec : bad) detail += " " + rec->cycle.to_string();
    out.push_back({"table_classifier_agreement", bad.empty(), true, detail});
  }
  const auto bad = r.exclusion_violations();
  std::string detail = "excluded=" + std::to_string(r.excluded_cycles) +
                       " figure8_among_excluded=" + std::to_string(bad.size());
  for (const auto* rec : bad) detail += " " + rec->cycle.to_string();
  out.push_back({"trivial_triple_exclusion", bad.empty(), true, detail});
  return out;
}

/// Per-type bounds. Asserted only when all figure-8 cycles of the
/// configuration match a single type; mixed configurations get a flag and
/// the same checks as informational verdicts.
inline std::vector<Verdict> verify_lemma_bounds(const CensusReport& r) {
  if (r.n != 7) throw PreconditionError("type-conditional checks apply to K7");
  if (!r.tables_evaluated) throw PreconditionError("type-conditional checks need table matches");
  std::vector<Verdict> out;
  const auto types = r.figure8_types();
  const bool mixed = types.size() > 1;
  const bool has_i = types.contains(TableType::I);
  const bool has_ii = types.contains(TableType::II);
  const bool has_iii = types.contains(TableType::III);
  std::string type_list;
  for (auto t : types) type_list += std::string(type_list.empty() ? "" : ",") + to_string(t);
  const std::string count = "figure8=" + std::to_string(r.figure8) + " types={" + type_list + "}";

  out.push_back({"figure8_at_most_3", r.figure8 <= 3, true, count});
  out.push_back({"type_iii_is_unique", !has_iii || r.figure8 == 1, !mixed, count});
  out.push_back({"type_i_at_most_2", !(has_i && !has_ii && !has_iii) || r.figure8 <= 2, !mixed, count});
  out.push_back({"mixed_types", !mixed, false, count});
  return out;
}

}  // namespace stickknot
