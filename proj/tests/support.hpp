#pragma once

// Shared helpers for the test suite: fixture loading, random inputs and
// reference computations that share no code with the library routines they
// check.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "stickknot/stickknot.hpp"

namespace testing_support {

using namespace stickknot;

inline std::string fixture_path(const std::string& name) { return std::string(STICKKNOT_FIXTURE_DIR) + "/" + name; }
inline std::string data_path(const std::string& name) { return std::string(STICKKNOT_DATA_DIR) + "/" + name; }
inline const std::string kWitness = "witness_k7_three_figure8.cfg";

/// Reads X[a,b,c,d] lines; '#' starts a comment.
inline PlanarDiagram read_pd_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  const std::regex cross(R"(X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\])");
  PlanarDiagram pd;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::smatch m;
    if (!std::regex_search(line, m, cross)) continue;
    pd.crossings.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
  }
  return pd;
}

/// Cofactor expansion along the first row; small matrices only.
inline long long cofactor_determinant(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long sum = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const long long term = m[0][col] * cofactor_determinant(minor);
    sum += col % 2 == 0 ? term : -term;
  }
  return sum;
}

inline Scalar random_rational(std::mt19937_64& rng, int num_bound = 50, int den_bound = 9) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  return Scalar(num(rng), den(rng));
}

inline Point3 random_point(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline Configuration config_from_ints(const std::vector<std::array<long long, 3>>& xs) {
  std::vector<Point3> pts;
  for (const auto& p : xs) pts.push_back(make_point(p[0], p[1], p[2]));
  return Configuration(std::move(pts));
}

/// Applies new_label[v-1] to every vertex: point v moves to slot new_label[v-1].
inline Configuration relabel(const Configuration& c, const std::vector<Vertex>& new_label) {
  std::vector<Point3> pts(c.size());
  for (std::size_t v = 1; v <= c.size(); ++v) pts[new_label[v - 1] - 1] = c.point(static_cast<Vertex>(v));
  return Configuration(std::move(pts));
}

inline Cycle relabel(const Cycle& cycle, const std::vector<Vertex>& new_label) {
  std::vector<Vertex> seq;
  for (Vertex v : cycle.vertices()) seq.push_back(new_label[v - 1]);
  return Cycle(std::move(seq));
}

inline Configuration mirror_z(const Configuration& c) {
  std::vector<Point3> pts(c.points().begin(), c.points().end());
  for (auto& p : pts) p.z = -p.z;
  return Configuration(std::move(pts));
}

// Reference crossing scan. Works on the rational coordinates and a direction
// w directly: a point x projects to the class of x modulo w, tested through
// cross products with w, so no planar frame is chosen.

struct ScanCrossing {
  std::size_t over_edge = 0, under_edge = 0;
  Scalar over_param, under_param;
  Sign handedness = Sign::Zero;
  friend bool operator==(const ScanCrossing&, const ScanCrossing&) = default;
  friend bool operator<(const ScanCrossing& a, const ScanCrossing& b) {
    return std::tie(a.over_edge, a.under_edge, a.over_param, a.under_param, a.handedness) <
           std::tie(b.over_edge, b.under_edge, b.over_param, b.under_param, b.handedness);
  }
};

struct Scan {
  bool regular = true;
  std::vector<ScanCrossing> crossings;  // sorted
};

inline Scan scan_cycle(const Configuration& c, const Cycle& cycle, const Direction& dir) {
  const Point3 w{Scalar(dir.x), Scalar(dir.y), Scalar(dir.z)};
  const std::size_t m = cycle.size();
  auto P = [&](std::size_t i) { return c.point(cycle[i]); };
  auto flat = [&](const Point3& x) { return cross(x, w); };
  const Point3 zero{};
  Scan out;

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (flat(P(a) - P(b)) == zero) out.regular = false;

  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t e = 0; e < m; ++e) {
      if (k == e || k == (e + 1) % m) continue;
      const Point3 d = flat(P(e + 1) - P(e)), r = flat(P(k) - P(e));
      if (d == zero || cross(d, r) != zero) continue;
      const Scalar lambda = dot(r, d) / dot(d, d);
      if (lambda >= 0 && lambda <= 1) out.regular = false;
    }

  std::vector<Point3> points;
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = e + 1; f < m; ++f) {
      if (f == e + 1 || (e == 0 && f == m - 1)) continue;
      const Point3 d1 = P(e + 1) - P(e), d2 = P(f + 1) - P(f);
      const Point3 A = flat(d1), B = flat(d2), C = flat(P(f) - P(e));
      const Scalar den = dot(cross(A, B), w);
      if (den == 0) continue;
      const Scalar s = dot(cross(C, B), w) / den;
      const Scalar t = dot(cross(C, A), w) / den;
      if (s <= 0 || s >= 1 || t <= 0 || t >= 1) continue;
      const Point3 X = P(e) + Point3{s * d1.x, s * d1.y, s * d1.z};
      const Point3 Y = P(f) + Point3{t * d2.x, t * d2.y, t * d2.z};
      const Scalar depth = dot(X, w) - dot(Y, w);
      if (depth == 0) {
        out.regular = false;
        continue;
      }
      for (const auto& q : points)
        if (flat(q - X) == zero) out.regular = false;
      points.push_back(X);
      ScanCrossing x;
      const bool e_over = depth > 0;
      x.over_edge = e_over ? e : f;
      x.under_edge = e_over ? f : e;
      x.over_param = e_over ? s : t;
      x.under_param = e_over ? t : s;
      const Point3& dover = e_over ? d1 : d2;
      const Point3& dunder = e_over ? d2 : d1;
      x.handedness = sign_of(dot(cross(dover, dunder), w));
      out.crossings.push_back(x);
    }
  std::sort(out.crossings.begin(), out.crossings.end());
  return out;
}

inline std::vector<ScanCrossing> as_scan(const Diagram& d) {
  std::vector<ScanCrossing> out;
  for (const auto& x : d.crossings)
    out.push_back({x.over_edge, x.under_edge, x.over_param, x.under_param, x.handedness});
  std::sort(out.begin(), out.end());
  return out;
}

/// Runs a shell command, capturing stdout; returns the exit status.
inline int run_command(const std::string& cmd, std::string* out = nullptr) {
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string text;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) text.append(buf, got);
  const int status = ::pclose(pipe);
  if (out) *out = std::move(text);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("stickknot-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing_support
