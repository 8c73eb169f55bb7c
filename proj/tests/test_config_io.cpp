#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace stickknot;
using namespace testing_support;

namespace {

int error_line(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

const char* kHeader = "stickknot-config 1\nn 4\n";

}  // namespace

TEST(ParseScalar, IntegersAndFractions) {
  EXPECT_EQ(parse_scalar("12"), Scalar(12));
  EXPECT_EQ(parse_scalar("-7"), Scalar(-7));
  EXPECT_EQ(parse_scalar("+7"), Scalar(7));
  EXPECT_EQ(parse_scalar("2/4"), Scalar(1, 2));
  EXPECT_EQ(parse_scalar("-3/6"), Scalar(-1, 2));
  EXPECT_EQ(parse_scalar("123456789012345678901234567890/3"),
            Scalar(BigInt("41152263004115226300411522630")));
}

TEST(ParseScalar, Rejects) {
  for (const char* bad : {"", "-", "1.5", "1e3", "1/0", "1/-2", "/3", "3/", "x", "--1"})
    EXPECT_THROW(parse_scalar(bad), ParseError) << bad;
}

TEST(FormatScalar, Canonical) {
  EXPECT_EQ(format_scalar(Scalar(6, 4)), "3/2");
  EXPECT_EQ(format_scalar(Scalar(-6, 3)), "-2");
  EXPECT_EQ(format_scalar(Scalar(0, 5)), "0");
}

TEST(ParseConfig, WorkedExample) {
  const std::string text =
      "# a comment\n"
      "stickknot-config 1\n"
      "n 5\n"
      "0 0 0\n"
      "2 0 0\n"
      "0 2 0\n"
      "1/2 1/2 -1\n"
      "1/2 1/2 1   # trailing comment\n";
  const ConfigFile f = parse_config_text(text);
  ASSERT_EQ(f.points.size(), 5u);
  EXPECT_EQ(f.comments, std::vector<std::string>{"a comment"});
  EXPECT_EQ(f.points[3].x, Scalar(1, 2));
  EXPECT_EQ(f.points[3].z, Scalar(-1));
  const Configuration c(f.points);
  EXPECT_EQ(epsilon(c, 1, 2, 3, 4, 5), Sign::Positive);
}

TEST(ParseConfig, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("# c\nstickknot-config 2\n"), 2);
  EXPECT_EQ(error_line("hello 1\n"), 1);
  EXPECT_EQ(error_line("stickknot-config 1\nm 4\n"), 2);
  EXPECT_EQ(error_line("stickknot-config 1\nn 3\n"), 2);
  EXPECT_EQ(error_line("stickknot-config 1\nn 12\n"), 2);
  EXPECT_EQ(error_line(std::string(kHeader) + "0 0 0\n1 0 0\n0 1 x\n0 0 1\n"), 5);
  EXPECT_EQ(error_line(std::string(kHeader) + "0 0 0\n1 0\n"), 4);
  EXPECT_EQ(error_line(std::string(kHeader) + "0 0 0\n1 0 0\n0 1/0 0\n0 0 1\n"), 5);
  EXPECT_EQ(error_line(std::string(kHeader) + "0 0 0\n1 0 0\n0 1 0\n0 0 1\n5 5 5\n"), 7);
  EXPECT_EQ(error_line(std::string(kHeader) + "0 0 0\n1 0 0\n"), 4);
  EXPECT_EQ(error_line(""), 0);
}

TEST(ParseConfig, AcceptsCrlfAndBlankLines) {
  const ConfigFile f = parse_config_text("stickknot-config 1\r\n\r\nn 4\r\n0 0 0\r\n1 0 0\r\n\n0 1 0\r\n0 0 1\r\n");
  EXPECT_EQ(f.points.size(), 4u);
}

TEST(ParseConfig, SyntaxOnlyGeometryIsCheckedLater) {
  const ConfigFile f = parse_config_text(std::string(kHeader) + "0 0 0\n1 0 0\n0 1 0\n2 3 0\n");
  EXPECT_THROW(Configuration(f.points), DegeneracyError);
}

TEST(FormatConfig, RoundTripIsByteStable) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point3> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(random_point(rng));
    const std::string text = format_config(pts, {"trial " + std::to_string(trial)});
    const ConfigFile f = parse_config_text(text);
    EXPECT_EQ(f.points, pts);
    EXPECT_EQ(format_config(f.points, f.comments), text);
  }
}

TEST(FormatConfig, WitnessFileIsCanonical) {
  const std::string text = read_file(data_path(kWitness));
  const ConfigFile f = parse_config_text(text);
  EXPECT_EQ(format_config(f.points, f.comments), text);
}

TEST(Files, MissingFileIsAParseError) { EXPECT_THROW(read_file("/nonexistent/stickknot.cfg"), ParseError); }
