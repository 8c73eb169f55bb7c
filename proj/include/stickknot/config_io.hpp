#pragma once

// Text configuration files.
//
//   # free-form comment lines
//   stickknot-config 1
//   n 7
//   12 -40 7
//   1/2 3 -5/7
//   ...
//
// Each coordinate is an integer or an exact fraction p/q (q > 0). Output is
// canonical: reduced fractions, integers without a denominator, so a written
// file parses back to an identical configuration and re-writes byte-for-byte.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stickknot/errors.hpp"
#include "stickknot/geometry.hpp"

namespace stickknot {

inline constexpr std::string_view kConfigTag = "stickknot-config";
inline constexpr int kConfigVersion = 1;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

inline Scalar parse_scalar(std::string_view tok, int line = 0) {
  const auto slash = tok.find('/');
  std::string_view num = tok.substr(0, slash);
  const bool neg = !num.empty() && (num.front() == '-' || num.front() == '+');
  std::string_view digits = neg ? num.substr(1) : num;
  if (!detail::all_digits(digits)) throw ParseError(line, "bad number '" + std::string(tok) + "'");
  BigInt p{std::string(digits)};
  if (num.front() == '-') p = -p;
  if (slash == std::string_view::npos) return Scalar(p);
  std::string_view den = tok.substr(slash + 1);
  if (!detail::all_digits(den)) throw ParseError(line, "bad denominator in '" + std::string(tok) + "'");
  BigInt q{std::string(den)};
  if (q == 0) throw ParseError(line, "zero denominator in '" + std::string(tok) + "'");
  return Scalar(p, q);
}

inline std::string format_scalar(const Scalar& s) { return s.str(); }

struct ConfigFile {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<Point3> points;
};

/// Syntax only; geometric validity is checked by Configuration.
inline ConfigFile parse_config_text(std::string_view text) {
  ConfigFile out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  int stage = 0;  // 0: tag, 1: n, 2: points
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) {
      if (stage == 0 && raw.find_first_not_of(" \t") == hash) {
        std::string c = raw.substr(hash + 1);
        if (!c.empty() && c.front() == ' ') c.erase(0, 1);
        out.comments.push_back(c);
      }
      raw.erase(hash);
    }
    const auto toks = detail::split_ws(raw);
    if (toks.empty()) continue;
    if (stage == 0) {
      if (toks.size() != 2 || toks[0] != kConfigTag)
        throw ParseError(line, "expected '" + std::string(kConfigTag) + " " + std::to_string(kConfigVersion) + "'");
      if (toks[1] != std::to_string(kConfigVersion))
        throw ParseError(line, "unsupported version '" + toks[1] + "'");
      stage = 1;
    } else if (stage == 1) {
      if (toks.size() != 2 || toks[0] != "n" || !detail::all_digits(toks[1]) || toks[1].size() > 2)
        throw ParseError(line, "expected 'n <count>'");
      n = std::stoul(toks[1]);
      if (n < 4 || n > 9) throw ParseError(line, "n must be between 4 and 9");
      stage = 2;
    } else {
      if (out.points.size() == n) throw ParseError(line, "more than n points");
      if (toks.size() != 3) throw ParseError(line, "expected three coordinates");
      out.points.push_back({parse_scalar(toks[0], line), parse_scalar(toks[1], line), parse_scalar(toks[2], line)});
    }
  }
  if (stage < 2) throw ParseError(line, "truncated file: missing header");
  if (out.points.size() != n)
    throw ParseError(line, "expected " + std::to_string(n) + " points, found " + std::to_string(out.points.size()));
  return out;
}

inline std::string format_config(std::span<const Point3> points, const std::vector<std::string>& comments = {}) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += std::string(kConfigTag) + " " + std::to_string(kConfigVersion) + "\n";
  out += "n " + std::to_string(points.size()) + "\n";
  for (const auto& p : points)
    out += format_scalar(p.x) + " " + format_scalar(p.y) + " " + format_scalar(p.z) + "\n";
  return out;
}

inline std::string format_config(const Configuration& c, const std::vector<std::string>& comments = {}) {
  return format_config(c.points(), comments);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace stickknot
