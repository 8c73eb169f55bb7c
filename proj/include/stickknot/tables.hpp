#pragma once

// Epsilon sign tables of labeled heptagons and the three figure-8 patterns.
//
// A labeling of a heptagon is a base vertex plus an orientation; position p
// (1..7) carries vertex labeling[p-1]. Row r of a table is the triangle on
// positions (r, r+1, r+2) and its three columns are the cycle edges spanned
// by the remaining positions, (r+3, r+4), (r+4, r+5), (r+5, r+6), all mod 7.
// Cells are stored row-major in that order.

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stickknot/cycle.hpp"
#include "stickknot/epsilon_cache.hpp"
#include "stickknot/geometry.hpp"

namespace stickknot {

using Labeling = std::array<Vertex, 7>;

struct EpsilonTable {
  Labeling labeling{};
  std::array<Sign, 21> cells{};

  Sign at(std::size_t row, std::size_t col) const { return cells[row * 3 + col]; }
  friend bool operator==(const EpsilonTable&, const EpsilonTable&) = default;
};

enum class TableType { I, II, III };

inline const char* to_string(TableType t) {
  switch (t) {
    case TableType::I: return "I";
    case TableType::II: return "II";
    case TableType::III: return "III";
  }
  return "?";
}

/// '+' cells equal a common sign s, '-' cells equal -s, 'x' cells are zero.
struct TypePattern {
  TableType type;
  std::array<std::string_view, 7> rows;
};

inline constexpr TypePattern kTypeI{
    TableType::I, {"+-x", "-xx", "x+x", "+xx", "x-x", "-xx", "x+x"}};
inline constexpr TypePattern kTypeII{
    TableType::II, {"+-x", "-xx", "x+x", "+xx", "x-x", "-+x", "x+x"}};
inline constexpr TypePattern kTypeIII{
    TableType::III, {"+-x", "x-x", "x+x", "+xx", "x-x", "-xx", "x+x"}};

inline constexpr std::array<const TypePattern*, 3> kPatterns{&kTypeI, &kTypeII, &kTypeIII};

namespace detail {

constexpr int differing_rows(const TypePattern& a, const TypePattern& b) {
  int n = 0;
  for (std::size_t r = 0; r < 7; ++r) n += a.rows[r] != b.rows[r];
  return n;
}

constexpr bool every_row_signed(const TypePattern& p) {
  for (auto row : p.rows)
    if (row.find_first_of("+-") == std::string_view::npos) return false;
  return true;
}

}  // namespace detail

static_assert(detail::differing_rows(kTypeI, kTypeII) == 1 && kTypeII.rows[5] != kTypeI.rows[5]);
static_assert(detail::differing_rows(kTypeI, kTypeIII) == 1 && kTypeIII.rows[1] != kTypeI.rows[1]);
static_assert(detail::differing_rows(kTypeII, kTypeIII) == 2);
static_assert(detail::every_row_signed(kTypeI) && detail::every_row_signed(kTypeII) &&
              detail::every_row_signed(kTypeIII));

template <EpsilonSource F>
EpsilonTable build_table(const F& eps, const Labeling& labeling) {
  EpsilonTable t;
  t.labeling = labeling;
  auto at = [&](std::size_t pos) { return labeling[pos % 7]; };
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t col = 0; col < 3; ++col)
      t.cells[r * 3 + col] = eps(at(r), at(r + 1), at(r + 2), at(r + 3 + col), at(r + 4 + col));
  return t;
}

inline EpsilonTable build_table(const Configuration& c, const Labeling& labeling) {
  if (c.size() != 7) throw PreconditionError("epsilon tables need a 7-point configuration");
  return build_table(
      [&](Vertex a, Vertex b, Vertex t, Vertex j, Vertex k) { return epsilon(c, a, b, t, j, k); },
      labeling);
}

/// The sign s that makes the table fit the pattern, if any.
inline std::optional<Sign> match_sign(const EpsilonTable& t, const TypePattern& p) {
  for (Sign s : {Sign::Positive, Sign::Negative}) {
    bool ok = true;
    for (std::size_t r = 0; r < 7 && ok; ++r)
      for (std::size_t col = 0; col < 3 && ok; ++col) {
        const char slot = p.rows[r][col];
        const Sign want = slot == '+' ? s : slot == '-' ? -s : Sign::Zero;
        ok = t.at(r, col) == want;
      }
    if (ok) return s;
  }
  return std::nullopt;
}

inline bool matches_pattern(const EpsilonTable& t, const TypePattern& p) {
  return match_sign(t, p).has_value();
}

/// The 14 labelings of a heptagon: the 7 rotations of its canonical
/// sequence, then the 7 rotations of the reversed sequence.
inline std::vector<Labeling> labelings(const Cycle& cycle) {
  if (cycle.size() != 7) throw PreconditionError("labelings are defined for heptagons");
  std::vector<Labeling> out;
  for (int dirn : {1, -1})
    for (std::size_t base = 0; base < 7; ++base) {
      Labeling l{};
      for (std::size_t p = 0; p < 7; ++p)
        l[p] = cycle[static_cast<std::size_t>(static_cast<long>(base) + 7 + dirn * static_cast<long>(p)) % 7];
      out.push_back(l);
    }
  return out;
}

struct TableMatch {
  Labeling labeling{};
  TableType type = TableType::I;
  Sign s = Sign::Positive;
};

/// Every (labeling, type) pair that matches, labelings in the order of
/// labelings() and types in the order I, II, III.
template <EpsilonSource F>
std::vector<TableMatch> all_table_matches(const F& eps, const Cycle& cycle) {
  std::vector<TableMatch> out;
  for (const auto& l : labelings(cycle)) {
    const EpsilonTable t = build_table(eps, l);
    for (const TypePattern* p : kPatterns)
      if (auto s = match_sign(t, *p)) out.push_back({l, p->type, *s});
  }
  return out;
}

template <EpsilonSource F>
std::optional<TableMatch> figure8_by_table(const F& eps, const Cycle& cycle) {
  for (const auto& l : labelings(cycle)) {
    const EpsilonTable t = build_table(eps, l);
    for (const TypePattern* p : kPatterns)
      if (auto s = match_sign(t, *p)) return TableMatch{l, p->type, *s};
  }
  return std::nullopt;
}

inline std::optional<TableMatch> figure8_by_table(const Configuration& c, const Cycle& cycle) {
  if (c.size() != 7) throw PreconditionError("table test needs a 7-point configuration");
  return figure8_by_table(EpsilonCache(c), cycle);
}

inline bool is_figure8_by_table(const Configuration& c, const Cycle& cycle) {
  return figure8_by_table(c, cycle).has_value();
}

inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : s == Sign::Negative ? '-' : '0'; }

/// Seven lines "123 | 45 56 67 | + - 0" indexed by labeling positions,
/// preceded by the labeling itself.
inline std::string format_table(const EpsilonTable& t) {
  std::ostringstream out;
  out << "labeling";
  for (Vertex v : t.labeling) out << ' ' << v;
  out << '\n';
  auto pos = [](std::size_t p) { return static_cast<char>('1' + p % 7); };
  for (std::size_t r = 0; r < 7; ++r) {
    out << pos(r) << pos(r + 1) << pos(r + 2) << " |";
    for (std::size_t col = 0; col < 3; ++col) out << ' ' << pos(r + 3 + col) << pos(r + 4 + col);
    out << " |";
    for (std::size_t col = 0; col < 3; ++col) out << ' ' << sign_char(t.at(r, col));
    out << '\n';
  }
  return out.str();
}

}  // namespace stickknot
