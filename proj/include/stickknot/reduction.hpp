#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

#include "stickknot/cycle.hpp"
#include "stickknot/epsilon_cache.hpp"
#include "stickknot/geometry.hpp"

namespace stickknot {

/// Unordered vertex triple, stored sorted.
class Triple {
 public:
  Triple(Vertex a, Vertex b, Vertex c) : v_{a, b, c} {
    std::sort(v_.begin(), v_.end());
    if (v_[0] == v_[1] || v_[1] == v_[2]) throw PreconditionError("triple needs distinct vertices");
  }

  const std::array<Vertex, 3>& vertices() const noexcept { return v_; }
  bool contains(Vertex x) const { return x == v_[0] || x == v_[1] || x == v_[2]; }
  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  std::array<Vertex, 3> v_;
};

/// True when no edge of the complete graph on the other vertices pierces the
/// triangle. Orientation plays no role.
template <EpsilonSource F>
bool is_trivial_triple(const F& eps, std::size_t n, const Triple& t) {
  const auto [a, b, c] = t.vertices();
  for (Vertex l = 1; l <= static_cast<Vertex>(n); ++l) {
    if (t.contains(l)) continue;
    for (Vertex m = l + 1; m <= static_cast<Vertex>(n); ++m) {
      if (t.contains(m)) continue;
      if (eps(a, b, c, l, m) != Sign::Zero) return false;
    }
  }
  return true;
}

inline bool is_trivial_triple(const Configuration& c, const Triple& t) {
  for (Vertex v : t.vertices()) c.index(v);
  return is_trivial_triple(
      [&](Vertex a, Vertex b, Vertex x, Vertex j, Vertex k) { return epsilon(c, a, b, x, j, k); },
      c.size(), t);
}

template <EpsilonSource F>
std::set<Triple> trivial_triples(const F& eps, std::size_t n) {
  std::set<Triple> out;
  const auto top = static_cast<Vertex>(n);
  for (Vertex a = 1; a <= top; ++a)
    for (Vertex b = a + 1; b <= top; ++b)
      for (Vertex c = b + 1; c <= top; ++c)
        if (Triple t(a, b, c); is_trivial_triple(eps, n, t)) out.insert(t);
  return out;
}

inline std::set<Triple> trivial_triples(const Configuration& c) {
  return trivial_triples(EpsilonCache(c), c.size());
}

/// First trivial triple found among the cycle's consecutive windows
/// (v[i], v[i+1], v[i+2]) for i = 0, 1, ... of the canonical sequence.
inline std::optional<Triple> consecutive_trivial_triple(const Cycle& cycle,
                                                        const std::set<Triple>& triples) {
  if (triples.empty()) return std::nullopt;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Triple t(cycle[i], cycle[i + 1], cycle[i + 2]);
    if (triples.contains(t)) return t;
  }
  return std::nullopt;
}

/// Drops the middle vertex of a consecutive trivial triple: the triangle is
/// met by no other edge, so the two edges through the middle vertex slide
/// across it onto the chord.
inline Cycle reduce_along(const Configuration& c, const Cycle& cycle, const Triple& t) {
  if (cycle.size() < 4) throw PreconditionError("cannot reduce a triangle");
  std::optional<std::size_t> middle;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (Triple(cycle[i], cycle[i + 1], cycle[i + 2]) == t) middle = (i + 1) % cycle.size();
  if (!middle) throw PreconditionError("triple is not consecutive in the cycle");
  if (!is_trivial_triple(c, t)) throw PreconditionError("triple is not trivial");
  std::vector<Vertex> seq = cycle.vertices();
  seq.erase(seq.begin() + static_cast<long>(*middle));
  return Cycle(std::move(seq));
}

}  // namespace stickknot
