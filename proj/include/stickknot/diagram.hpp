#pragma once

// Regular projections of polygonal cycles and the knot determinant.
//
// A Projection is built once per (configuration, direction, edge set) and
// answers diagram queries for any cycle whose edges belong to the set. With
// the full edge set of K_n it serves all Hamiltonian cycles at once.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stickknot/bareiss.hpp"
#include "stickknot/cycle.hpp"
#include "stickknot/errors.hpp"
#include "stickknot/geometry.hpp"

namespace stickknot {

using Direction = Vec3<long long>;

/// Undirected edge with a < b.
struct Edge {
  Vertex a = 0, b = 0;

  Edge() = default;
  Edge(Vertex p, Vertex q) : a(std::min(p, q)), b(std::max(p, q)) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::vector<Edge> cycle_edges(const Cycle& cycle) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) out.emplace_back(cycle[i], cycle[i + 1]);
  return out;
}

inline std::vector<Edge> complete_graph_edges(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex a = 1; a <= static_cast<Vertex>(n); ++a)
    for (Vertex b = a + 1; b <= static_cast<Vertex>(n); ++b) out.emplace_back(a, b);
  return out;
}

struct Crossing {
  std::size_t over_edge = 0;
  std::size_t under_edge = 0;
  Scalar over_param;   // position along over_edge in traversal direction, in (0,1)
  Scalar under_param;
  Sign handedness = Sign::Zero;  // sign of cross2(over direction, under direction)
};

/// Crossing data of one projected cycle. Edge e runs from vertex e to
/// vertex e+1 of the cycle's canonical sequence.
struct Diagram {
  std::size_t n_edges = 0;
  std::vector<Crossing> crossings;
  /// Per edge: indices into crossings, sorted by parameter along the edge.
  std::vector<std::vector<std::size_t>> edge_order;
};

/// Planar-diagram code: one X[a,b,c,d] per crossing, strand labels listed
/// counterclockwise starting from the incoming under-strand. Strands are
/// numbered 1..2c in travel order.
struct PlanarDiagram {
  std::vector<std::array<int, 4>> crossings;
  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

enum class KnotClass { Unknot, Trefoil, FigureEight };

inline const char* to_string(KnotClass k) {
  switch (k) {
    case KnotClass::Unknot: return "unknot";
    case KnotClass::Trefoil: return "trefoil";
    case KnotClass::FigureEight: return "figure8";
  }
  return "?";
}

namespace detail {

inline BigInt to_big(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return neg ? BigInt(-out) : out;
}
inline const BigInt& to_big(const BigInt& v) { return v; }

template <class Int>
struct Point2 {
  Int x, y;
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

template <class Int>
Int cross2(const Point2<Int>& a, const Point2<Int>& b) {
  return a.x * b.y - a.y * b.x;
}
template <class Int>
Int dot2(const Point2<Int>& a, const Point2<Int>& b) {
  return a.x * b.x + a.y * b.y;
}

/// Orthonormal-up-to-scale frame (u, v, w) with u x v a positive multiple of
/// w; the viewer sits at +w, so larger p.w means "over".
template <class Int>
struct Frame {
  Vec3<Int> u, v, w;

  explicit Frame(const Direction& d) : w{Int(d.x), Int(d.y), Int(d.z)} {
    const long long ax = d.x < 0 ? -d.x : d.x, ay = d.y < 0 ? -d.y : d.y, az = d.z < 0 ? -d.z : d.z;
    Vec3<Int> axis{};
    if (ax <= ay && ax <= az)
      axis.x = 1;
    else if (ay <= az)
      axis.y = 1;
    else
      axis.z = 1;
    u = cross(w, axis);
    v = cross(w, u);
  }

  Point2<Int> image(const Vec3<Int>& p) const { return {dot(p, u), dot(p, v)}; }
};

/// Exact crossing parameters as fractions num/den with den > 0.
template <class Int>
struct RawCrossing {
  int lo_edge, hi_edge;  // indices into the edge list, lo_edge < hi_edge
  Int t_lo, t_hi, den;
  bool hi_over;
  Sign hand_lo_hi;  // sign of cross2(lo direction, hi direction), both oriented low->high label
};

struct ProjectionData {
  struct Entry {
    int lo_edge, hi_edge;
    Scalar t_lo, t_hi;
    bool hi_over;
    Sign hand_lo_hi;
  };
  std::vector<Entry> crossings;
  std::vector<std::vector<int>> passes;  // per edge, crossing ids sorted low->high
};

template <class Int>
std::optional<ProjectionData> build_projection(std::span<const Vec3<Int>> pts, const Direction& dir,
                                               std::span<const Edge> edges) {
  const Frame<Int> frame(dir);
  const std::size_t n = pts.size();
  std::vector<Point2<Int>> img(n);
  std::vector<bool> used(n, false);
  for (const auto& e : edges) used[e.a - 1] = used[e.b - 1] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (used[i]) img[i] = frame.image(pts[i]);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (used[i] && used[j] && img[i] == img[j]) return std::nullopt;

  for (const auto& e : edges) {
    const auto& a = img[e.a - 1];
    const auto& b = img[e.b - 1];
    for (std::size_t p = 0; p < n; ++p) {
      if (!used[p] || static_cast<Vertex>(p + 1) == e.a || static_cast<Vertex>(p + 1) == e.b) continue;
      if (cross2(b - a, img[p] - a) != Int(0)) continue;
      if (dot2(img[p] - a, b - a) > Int(0) && dot2(img[p] - b, a - b) > Int(0)) return std::nullopt;
    }
  }

  std::vector<RawCrossing<Int>> raw;
  std::vector<std::vector<int>> passes(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) continue;
      const auto &a = img[e.a - 1], &b = img[e.b - 1], &c = img[f.a - 1], &d = img[f.b - 1];
      const Sign o1 = sign_of(cross2(b - a, c - a)), o2 = sign_of(cross2(b - a, d - a));
      const Sign o3 = sign_of(cross2(d - c, a - c)), o4 = sign_of(cross2(d - c, b - c));
      if (o1 * o2 != Sign::Negative || o3 * o4 != Sign::Negative) continue;
      Int den = cross2(b - a, d - c);
      Int tn = cross2(c - a, d - c);
      Int sn = cross2(c - a, b - a);
      const Sign hand = sign_of(den);
      if (den < Int(0)) {
        den = -den;
        tn = -tn;
        sn = -sn;
      }
      // c + s(d-c) - a - t(b-a) = mu * w, and det[b-a, d-c, c-a] = mu * det[b-a, d-c, w];
      // the second factor has the sign of the projected cross product.
      const auto &A = pts[e.a - 1], &B = pts[e.b - 1], &C = pts[f.a - 1], &D = pts[f.b - 1];
      const Sign lift = sign_of(det3(B - A, D - C, C - A));
      if (lift == Sign::Zero) throw DegeneracyError("projected crossing of intersecting edges");
      raw.push_back({static_cast<int>(i), static_cast<int>(j), tn, sn, den, (lift * hand) == Sign::Positive, hand});
      passes[i].push_back(static_cast<int>(raw.size() - 1));
      passes[j].push_back(static_cast<int>(raw.size() - 1));
    }
  }

  auto param_on = [&](int cid, std::size_t edge) -> std::pair<const Int&, const Int&> {
    const auto& r = raw[cid];
    return {static_cast<std::size_t>(r.lo_edge) == edge ? r.t_lo : r.t_hi, r.den};
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& list = passes[e];
    std::sort(list.begin(), list.end(), [&](int x, int y) {
      auto [nx, dx] = param_on(x, e);
      auto [ny, dy] = param_on(y, e);
      return nx * dy < ny * dx;
    });
    for (std::size_t k = 0; k + 1 < list.size(); ++k) {
      auto [nx, dx] = param_on(list[k], e);
      auto [ny, dy] = param_on(list[k + 1], e);
      if (nx * dy == ny * dx) return std::nullopt;  // triple point
    }
  }

  ProjectionData out;
  out.passes = std::move(passes);
  out.crossings.reserve(raw.size());
  for (const auto& r : raw) {
    const BigInt den = to_big(r.den);
    out.crossings.push_back({r.lo_edge, r.hi_edge, Scalar(to_big(r.t_lo), den),
                             Scalar(to_big(r.t_hi), den), r.hi_over, r.hand_lo_hi});
  }
  return out;
}

struct Passage {
  int crossing;  // dense id within the cycle
  bool over;
};

/// Strand k runs from passage k to passage k+1 along the traversal.
inline PlanarDiagram planar_from_passages(const std::vector<Passage>& passages,
                                          const std::vector<Sign>& handedness) {
  const int count = static_cast<int>(passages.size());
  std::vector<std::array<int, 4>> slots(handedness.size(), {-1, -1, -1, -1});
  for (int k = 0; k < count; ++k) {
    const int in = (k + count - 1) % count + 1;
    const int out = k + 1;
    const Passage& p = passages[k];
    auto& x = slots[p.crossing];
    if (!p.over) {
      x[0] = in;
      x[2] = out;
    } else if (handedness[p.crossing] == Sign::Positive) {
      x[3] = in;
      x[1] = out;
    } else {
      x[1] = in;
      x[3] = out;
    }
  }
  return PlanarDiagram{std::move(slots)};
}

}  // namespace detail

/// Fixed candidate sequence: primitive integer vectors with first nonzero
/// component positive, ordered by max-norm then lexicographically.
inline const std::vector<Direction>& candidate_directions() {
  static const std::vector<Direction> dirs = [] {
    constexpr long long kMaxNorm = 6;
    std::vector<Direction> out;
    for (long long norm = 1; norm <= kMaxNorm; ++norm)
      for (long long x = -norm; x <= norm; ++x)
        for (long long y = -norm; y <= norm; ++y)
          for (long long z = -norm; z <= norm; ++z) {
            if (std::max({x < 0 ? -x : x, y < 0 ? -y : y, z < 0 ? -z : z}) != norm) continue;
            const long long lead = x != 0 ? x : (y != 0 ? y : z);
            if (lead < 0) continue;
            if (std::gcd(std::gcd(x, y), z) != 1) continue;
            out.push_back({x, y, z});
          }
    return out;
  }();
  return dirs;
}

class Projection {
 public:
  /// nullopt when the direction is not regular for the given edges.
  static std::optional<Projection> make(const Configuration& c, const Direction& dir,
                                        std::vector<Edge> edges) {
    for (const auto& e : edges) {
      c.index(e.a);
      c.index(e.b);
      if (e.a == e.b) throw PreconditionError("loop edge");
    }
    if (dir == Direction{}) throw PreconditionError("zero projection direction");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    auto data = with_image(c, [&](auto pts) { return detail::build_projection(pts, dir, edges); });
    if (!data) return std::nullopt;
    return Projection(c.size(), dir, std::move(edges), std::move(*data));
  }

  static std::optional<Projection> make(const Configuration& c, const Direction& dir) {
    return make(c, dir, complete_graph_edges(c.size()));
  }

  const Direction& direction() const noexcept { return dir_; }
  std::size_t total_crossings() const noexcept { return data_.crossings.size(); }

  PlanarDiagram planar_diagram(const Cycle& cycle) const {
    std::vector<detail::Passage> passages;
    std::vector<Sign> hands;
    walk(cycle, [&](int local, bool over, bool fresh, int, int, bool, Sign hand) {
      if (fresh) hands.push_back(hand);
      passages.push_back({local, over});
    });
    return detail::planar_from_passages(passages, hands);
  }

  Diagram diagram(const Cycle& cycle) const {
    Diagram d;
    d.n_edges = cycle.size();
    d.edge_order.resize(cycle.size());
    walk(cycle, [&](int local, bool over, bool fresh, int cid, int edge, bool reversed_here,
                    Sign hand) {
      const auto& entry = data_.crossings[cid];
      if (fresh) d.crossings.push_back(Crossing{0, 0, Scalar(0), Scalar(0), hand});
      Crossing& x = d.crossings[local];
      const bool here_is_lo = edge_id(cycle[edge], cycle[edge + 1]) == entry.lo_edge;
      Scalar t = here_is_lo ? entry.t_lo : entry.t_hi;
      if (reversed_here) t = Scalar(1) - t;
      if (over) {
        x.over_edge = static_cast<std::size_t>(edge);
        x.over_param = t;
      } else {
        x.under_edge = static_cast<std::size_t>(edge);
        x.under_param = t;
      }
      d.edge_order[edge].push_back(static_cast<std::size_t>(local));
    });
    return d;
  }

 private:
  Projection(std::size_t n, Direction dir, std::vector<Edge> edges, detail::ProjectionData data)
      : n_(n), dir_(dir), edges_(std::move(edges)), data_(std::move(data)), ids_(n * n, -1) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      ids_[(edges_[i].a - 1) * n_ + (edges_[i].b - 1)] = static_cast<int>(i);
      ids_[(edges_[i].b - 1) * n_ + (edges_[i].a - 1)] = static_cast<int>(i);
    }
  }

  int edge_id(Vertex a, Vertex b) const {
    const int id = ids_[(a - 1) * n_ + (b - 1)];
    if (id < 0) throw PreconditionError("cycle edge not covered by this projection");
    return id;
  }

  // Calls f(local id, over?, first visit?, projection crossing id, cycle edge,
  // edge reversed?, handedness in traversal orientation) for every
  // passage through a crossing between two edges of the cycle, in traversal order.
  template <class F>
  void walk(const Cycle& cycle, F&& f) const {
    const std::size_t m = cycle.size();
    std::vector<char> in_cycle(edges_.size(), 0);
    std::vector<char> reversed(edges_.size(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      const int id = edge_id(cycle[e], cycle[e + 1]);
      in_cycle[id] = 1;
      reversed[id] = cycle[e] > cycle[e + 1];
    }
    std::vector<int> local(data_.crossings.size(), -1);
    int next = 0;
    for (std::size_t e = 0; e < m; ++e) {
      const int id = edge_id(cycle[e], cycle[e + 1]);
      const auto& list = data_.passes[id];
      const bool rev = reversed[id];
      for (std::size_t k = 0; k < list.size(); ++k) {
        const int cid = list[rev ? list.size() - 1 - k : k];
        const auto& entry = data_.crossings[cid];
        const int partner = entry.lo_edge == id ? entry.hi_edge : entry.lo_edge;
        if (!in_cycle[partner]) continue;
        const bool over = (entry.hi_edge == id) == entry.hi_over;
        const bool fresh = local[cid] < 0;
        if (fresh) local[cid] = next++;
        // Handedness is cross2(over, under); flip for hi-over and for each
        // reversed traversal.
        Sign hand = entry.hand_lo_hi;
        if (entry.hi_over) hand = -hand;
        if (reversed[entry.lo_edge]) hand = -hand;
        if (reversed[entry.hi_edge]) hand = -hand;
        f(local[cid], over, fresh, cid, static_cast<int>(e), rev, hand);
      }
    }
  }

  std::size_t n_;
  Direction dir_;
  std::vector<Edge> edges_;
  detail::ProjectionData data_;
  std::vector<int> ids_;
};

inline bool is_regular(const Configuration& c, const Cycle& cycle, const Direction& dir) {
  return Projection::make(c, dir, cycle_edges(cycle)).has_value();
}

/// First `count` regular directions for the cycle, in candidate order.
inline std::vector<Direction> regular_directions(const Configuration& c, const Cycle& cycle,
                                                 std::size_t count) {
  std::vector<Direction> out;
  for (const auto& d : candidate_directions()) {
    if (out.size() == count) break;
    if (is_regular(c, cycle, d)) out.push_back(d);
  }
  if (out.size() < count) throw ExhaustionError("not enough regular projection directions");
  return out;
}

inline Direction generic_direction(const Configuration& c, const Cycle& cycle) {
  return regular_directions(c, cycle, 1).front();
}

/// First candidate direction that is regular for every edge of K_n at once.
inline Projection generic_projection(const Configuration& c) {
  for (const auto& d : candidate_directions())
    if (auto p = Projection::make(c, d)) return std::move(*p);
  throw ExhaustionError("no regular projection direction for the complete graph");
}

inline Direction generic_direction(const Configuration& c) {
  return generic_projection(c).direction();
}

inline Diagram project(const Configuration& c, const Cycle& cycle, const Direction& dir) {
  auto p = Projection::make(c, dir, cycle_edges(cycle));
  if (!p) throw DegeneracyError("projection direction is not regular for this cycle");
  return p->diagram(cycle);
}

inline PlanarDiagram to_planar_diagram(const Diagram& d) {
  std::vector<detail::Passage> passages;
  std::vector<Sign> hands;
  hands.reserve(d.crossings.size());
  for (const auto& x : d.crossings) hands.push_back(x.handedness);
  for (std::size_t e = 0; e < d.edge_order.size(); ++e)
    for (std::size_t id : d.edge_order[e])
      passages.push_back({static_cast<int>(id), d.crossings[id].over_edge == e});
  return detail::planar_from_passages(passages, hands);
}

/// |Alexander polynomial at -1|, from the colouring matrix: one row per
/// crossing, 2 at the over-arc and -1 at each under-arc; any first minor.
inline long long knot_determinant(const PlanarDiagram& pd) {
  const std::size_t c = pd.crossings.size();
  if (c <= 1) return 1;
  std::vector<int> labels;
  for (const auto& x : pd.crossings) labels.insert(labels.end(), x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto idx = [&](int label) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<std::size_t> parent(labels.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : pd.crossings) parent[find(idx(x[1]))] = find(idx(x[3]));

  std::vector<std::size_t> arc_of(labels.size());
  std::vector<long> roots;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::size_t r = find(i);
    auto it = std::find(roots.begin(), roots.end(), static_cast<long>(r));
    if (it == roots.end()) {
      roots.push_back(static_cast<long>(r));
      arc_of[i] = roots.size() - 1;
    } else {
      arc_of[i] = static_cast<std::size_t>(it - roots.begin());
    }
  }
  if (roots.size() != c)
    throw InconsistencyError("diagram is not a single-component knot diagram");

  IntMatrix<long long> m(c, std::vector<long long>(c, 0));
  for (std::size_t r = 0; r < c; ++r) {
    const auto& x = pd.crossings[r];
    m[r][arc_of[idx(x[1])]] += 2;
    m[r][arc_of[idx(x[0])]] -= 1;
    m[r][arc_of[idx(x[2])]] -= 1;
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  const long long det = bareiss_determinant(std::move(m));
  return det < 0 ? -det : det;
}

inline long long knot_determinant(const Diagram& d) { return knot_determinant(to_planar_diagram(d)); }

/// Arf invariant from the determinant: 0 iff det = +-1 mod 8.
inline int arf(long long determinant) {
  const long long r = ((determinant % 8) + 8) % 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

inline int arf(const Diagram& d) { return arf(knot_determinant(d)); }

inline KnotClass class_from_determinant(long long det) {
  switch (det) {
    case 1: return KnotClass::Unknot;
    case 3: return KnotClass::Trefoil;
    case 5: return KnotClass::FigureEight;
    default:
      throw InconsistencyError("determinant " + std::to_string(det) +
                               " is impossible for a polygon with at most 7 edges");
  }
}

inline KnotClass classify(const Configuration& c, const Cycle& cycle) {
  if (cycle.size() > 7) throw PreconditionError("classify supports at most 7 edges");
  auto p = Projection::make(c, generic_direction(c, cycle), cycle_edges(cycle));
  return class_from_determinant(knot_determinant(p->planar_diagram(cycle)));
}

}  // namespace stickknot
