#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace stickknot;
using namespace testing_support;

namespace {

Configuration witness() { return Configuration(parse_config_text(read_file(data_path(kWitness))).points); }

EpsilonTable table_from_pattern(const TypePattern& p, Sign s) {
  EpsilonTable t;
  t.labeling = {1, 2, 3, 4, 5, 6, 7};
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t col = 0; col < 3; ++col) {
      const char slot = p.rows[r][col];
      t.cells[r * 3 + col] = slot == '+' ? s : slot == '-' ? -s : Sign::Zero;
    }
  return t;
}

}  // namespace

TEST(Patterns, AllZeroTableMatchesNothing) {
  const EpsilonTable zero{};
  for (const TypePattern* p : kPatterns) EXPECT_FALSE(matches_pattern(zero, *p));
}

TEST(Patterns, SynthesizedTablesRoundTrip) {
  for (const TypePattern* p : kPatterns)
    for (Sign s : {Sign::Positive, Sign::Negative}) {
      const EpsilonTable t = table_from_pattern(*p, s);
      ASSERT_TRUE(matches_pattern(t, *p));
      EXPECT_EQ(match_sign(t, *p), s);
      for (const TypePattern* other : kPatterns)
        if (other != p) EXPECT_FALSE(matches_pattern(t, *other));
    }
}

TEST(Patterns, FlippedCoupledEntryBreaksTheMatch) {
  EpsilonTable t = table_from_pattern(kTypeI, Sign::Positive);
  // Row 234, column 56.
  ASSERT_EQ(t.cells[1 * 3 + 0], Sign::Negative);
  t.cells[1 * 3 + 0] = Sign::Positive;
  EXPECT_FALSE(matches_pattern(t, kTypeI));
}

TEST(Patterns, SignIsSharedAcrossTheWholeTable) {
  EpsilonTable t = table_from_pattern(kTypeI, Sign::Positive);
  // Negating only the last row gives a table whose rows each fit some sign.
  for (std::size_t col = 0; col < 3; ++col) t.cells[6 * 3 + col] = -t.cells[6 * 3 + col];
  EXPECT_FALSE(matches_pattern(t, kTypeI));
}

TEST(Patterns, TransliteratedRowsDifferWhereExpected) {
  EXPECT_EQ(kTypeI.rows[0], "+-x");
  EXPECT_EQ(kTypeI.rows[0][2], 'x');  // epsilon(123, 67) = 0
  EXPECT_EQ(kTypeII.rows[5], "-+x");
  EXPECT_EQ(kTypeI.rows[5], "-xx");
  EXPECT_EQ(kTypeIII.rows[1], "x-x");
  EXPECT_EQ(kTypeI.rows[1], "-xx");
  for (std::size_t r = 0; r < 7; ++r) {
    if (r != 5) EXPECT_EQ(kTypeI.rows[r], kTypeII.rows[r]);
    if (r != 1) EXPECT_EQ(kTypeI.rows[r], kTypeIII.rows[r]);
  }
}

TEST(Labelings, FourteenDihedralRelabelings) {
  const Cycle cycle = Cycle::parse("1362547");
  const auto ls = labelings(cycle);
  ASSERT_EQ(ls.size(), 14u);
  std::set<Labeling> distinct(ls.begin(), ls.end());
  EXPECT_EQ(distinct.size(), 14u);
  for (const auto& l : ls) EXPECT_EQ(Cycle(std::vector<Vertex>(l.begin(), l.end())), cycle);
  EXPECT_EQ(ls[0], (Labeling{1, 3, 6, 2, 5, 4, 7}));
  EXPECT_EQ(ls[7], (Labeling{1, 7, 4, 5, 2, 6, 3}));
  EXPECT_THROW(labelings(Cycle::parse("123456")), PreconditionError);
}

TEST(BuildTable, CellsAreEpsilonOfConsecutiveTriplesAndOppositeEdges) {
  const Configuration c = random_configuration(derive_seed(41, 1), 100);
  const Labeling l{3, 1, 4, 7, 5, 2, 6};
  const EpsilonTable t = build_table(c, l);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t col = 0; col < 3; ++col) {
      auto at = [&](std::size_t p) { return l[p % 7]; };
      EXPECT_EQ(t.at(r, col), epsilon(c, at(r), at(r + 1), at(r + 2), at(r + 3 + col), at(r + 4 + col)));
    }
  EXPECT_EQ(t, build_table(EpsilonCache(c), l));
}

TEST(BuildTable, ReversedLabelingRecomputedIndependently) {
  const Configuration c = witness();
  const Labeling forward{1, 2, 3, 4, 5, 6, 7};
  const Labeling reversed{1, 7, 6, 5, 4, 3, 2};
  const EpsilonTable a = build_table(c, reversed);
  const EpsilonTable b = build_table(EpsilonCache(c), reversed);
  EXPECT_EQ(a, b);
  EXPECT_NE(build_table(c, forward), a);
}

TEST(BuildTable, NeedsSevenPoints) {
  const Configuration c = random_configuration(derive_seed(41, 2), 100, 6);
  EXPECT_THROW(build_table(c, Labeling{1, 2, 3, 4, 5, 6, 7}), PreconditionError);
}

TEST(FigureEightByTable, WitnessFigureEightCyclesMatch) {
  const Configuration c = witness();
  for (const char* text : {"1234567", "1236754", "1276345"}) {
    const auto m = figure8_by_table(c, Cycle::parse(text));
    ASSERT_TRUE(m.has_value()) << text;
    EXPECT_TRUE(matches_pattern(build_table(c, m->labeling), *kPatterns[static_cast<int>(m->type)]));
  }
}

TEST(FigureEightByTable, AgreesWithDeterminantClassifier) {
  int figure8 = 0, unknots_checked = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Configuration c = random_configuration(derive_seed(42, seed), 100);
    const EpsilonCache eps(c);
    const Projection proj = generic_projection(c);
    for (const auto& cycle : hamiltonian_cycles(7)) {
      const KnotClass k = class_from_determinant(knot_determinant(proj.planar_diagram(cycle)));
      const bool by_table = figure8_by_table(eps, cycle).has_value();
      EXPECT_EQ(by_table, k == KnotClass::FigureEight) << cycle.to_string() << " seed " << seed;
      figure8 += k == KnotClass::FigureEight;
      unknots_checked += k == KnotClass::Unknot;
    }
  }
  EXPECT_GT(figure8, 0);
  EXPECT_GT(unknots_checked, 0);
}

TEST(FigureEightByTable, MatchedTablesHaveASignedEntryInEveryRow) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Configuration c = random_configuration(derive_seed(43, seed), 100);
    const EpsilonCache eps(c);
    for (const auto& cycle : hamiltonian_cycles(7))
      for (const auto& m : all_table_matches(eps, cycle)) {
        const EpsilonTable t = build_table(eps, m.labeling);
        for (std::size_t r = 0; r < 7; ++r)
          EXPECT_TRUE(t.at(r, 0) != Sign::Zero || t.at(r, 1) != Sign::Zero || t.at(r, 2) != Sign::Zero);
        // Type-I row 123 resolves to (+,-) or (-,+) on edges 45, 56 and 0 on 67.
        if (m.type == TableType::I) {
          EXPECT_EQ(t.at(0, 0), -t.at(0, 1));
          EXPECT_NE(t.at(0, 0), Sign::Zero);
          EXPECT_EQ(t.at(0, 2), Sign::Zero);
          EXPECT_EQ(t.at(1, 0), -t.at(0, 0));
        }
      }
  }
}

TEST(FigureEightByTable, VerdictIndependentOfTheStartingLabeling) {
  const Configuration c = witness();
  const EpsilonCache eps(c);
  for (const auto& cycle : hamiltonian_cycles(7)) {
    const bool verdict = figure8_by_table(eps, cycle).has_value();
    for (const auto& l : labelings(cycle)) {
      const Cycle rotated(std::vector<Vertex>(l.begin(), l.end()));
      EXPECT_EQ(figure8_by_table(eps, rotated).has_value(), verdict);
    }
  }
}

TEST(FormatTable, RowLayout) {
  const EpsilonTable t = table_from_pattern(kTypeII, Sign::Negative);
  const std::string text = format_table(t);
  EXPECT_EQ(text,
            "labeling 1 2 3 4 5 6 7\n"
            "123 | 45 56 67 | - + 0\n"
            "234 | 56 67 71 | + 0 0\n"
            "345 | 67 71 12 | 0 - 0\n"
            "456 | 71 12 23 | - 0 0\n"
            "567 | 12 23 34 | 0 + 0\n"
            "671 | 23 34 45 | + - 0\n"
            "712 | 34 45 56 | 0 - 0\n");
}
