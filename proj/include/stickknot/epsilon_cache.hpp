#pragma once

#include <algorithm>
#include <concepts>
#include <utility>
#include <vector>

#include "stickknot/geometry.hpp"

namespace stickknot {

/// Anything answering epsilon(i1 i2 i3, jk) for 1-based labels.
template <class F>
concept EpsilonSource = requires(const F& f, Vertex v) {
  { f(v, v, v, v, v) } -> std::convertible_to<Sign>;
};

/// All epsilon values of a configuration, evaluated once per unordered
/// (triangle, edge) pair. Orientation is recovered from permutation parity:
/// cyclic rotations of the triangle keep its normal, a transposition or an
/// edge reversal flips the sign.
class EpsilonCache {
 public:
  explicit EpsilonCache(const Configuration& c)
      : n_(c.size()), values_(n_ * n_ * n_ * n_ * n_, Sign::Zero) {
    with_image(c, [&](auto pts) {
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b)
          for (std::size_t t = b + 1; t < n_; ++t)
            for (std::size_t j = 0; j < n_; ++j) {
              if (j == a || j == b || j == t) continue;
              for (std::size_t k = j + 1; k < n_; ++k) {
                if (k == a || k == b || k == t) continue;
                values_[slot(a, b, t, j, k)] = epsilon(pts[a], pts[b], pts[t], pts[j], pts[k]);
              }
            }
    });
  }

  std::size_t size() const noexcept { return n_; }

  /// epsilon(i1 i2 i3, jk) with 1-based labels; the five labels must be distinct.
  Sign operator()(Vertex i1, Vertex i2, Vertex i3, Vertex j, Vertex k) const {
    std::size_t t[3] = {static_cast<std::size_t>(i1 - 1), static_cast<std::size_t>(i2 - 1),
                        static_cast<std::size_t>(i3 - 1)};
    bool flip = false;
    if (t[0] > t[1]) std::swap(t[0], t[1]), flip = !flip;
    if (t[1] > t[2]) std::swap(t[1], t[2]), flip = !flip;
    if (t[0] > t[1]) std::swap(t[0], t[1]), flip = !flip;
    std::size_t e0 = static_cast<std::size_t>(j - 1), e1 = static_cast<std::size_t>(k - 1);
    if (e0 > e1) std::swap(e0, e1), flip = !flip;
    const Sign s = values_[slot(t[0], t[1], t[2], e0, e1)];
    return flip ? -s : s;
  }

 private:
  std::size_t slot(std::size_t a, std::size_t b, std::size_t c, std::size_t j, std::size_t k) const {
    return (((a * n_ + b) * n_ + c) * n_ + j) * n_ + k;
  }

  std::size_t n_;
  std::vector<Sign> values_;
};

}  // namespace stickknot
