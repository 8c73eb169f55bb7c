#pragma once

// Exact geometric predicates over labeled point configurations.
//
// Every predicate is a sign decision on a polynomial in the coordinates, so
// the same templates run on exact rationals (the public Point3 type) and on
// the integer image of a configuration (coordinates scaled by a common
// positive denominator). Positive scaling and translation leave every sign
// unchanged.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stickknot/errors.hpp"

namespace stickknot {

using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Int128 = __int128;

/// Vertex labels are 1-based, matching the usual <1234567> notation.
using Vertex = int;

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

template <class T>
constexpr Sign sign_of(const T& v) {
  if (v > 0) return Sign::Positive;
  if (v < 0) return Sign::Negative;
  return Sign::Zero;
}

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr int to_int(Sign s) { return static_cast<int>(s); }

template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// det[a, b, c] with a, b, c as rows.
template <class T>
T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}

using Point3 = Vec3<Scalar>;

/// Sign of det[b-a, c-a, d-a]. Zero iff the four points are coplanar.
template <class T>
Sign orient3d(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c, const Vec3<T>& d) {
  return sign_of(det3(b - a, c - a, d - a));
}

/// +1 for p in the open half-space H+ of the oriented triple (i, j, k), that
/// is (ij x jk) . jp > 0; -1 for H-; 0 on the plane through i, j, k.
///
/// Since ij x jk = ij x ik and (ij x ik) . ij = 0, the value equals
/// orient3d(i, j, k, p) with the arguments in the same order.
template <class T>
Sign side_of_plane(const Vec3<T>& i, const Vec3<T>& j, const Vec3<T>& k, const Vec3<T>& p) {
  const auto normal = cross(j - i, k - j);
  if (normal == Vec3<T>{}) throw DegeneracyError("side_of_plane: collinear triangle");
  return sign_of(dot(normal, p - j));
}

/// Whether segment (s1, s2) meets triangle (t1, t2, t3).
///
/// Decided by five orientation tests: the segment endpoints must lie on
/// opposite sides of the triangle's plane, and the segment's supporting line
/// must turn the same way around all three triangle edges. Any zero along the
/// way means four of the five points are coplanar, which general position
/// rules out, so it raises DegeneracyError. Under general position a meeting
/// point is interior to both the segment and the triangle, which is why the
/// open/closed distinction does not arise.
template <class T>
bool segment_pierces_triangle(const Vec3<T>& t1, const Vec3<T>& t2, const Vec3<T>& t3,
                              const Vec3<T>& s1, const Vec3<T>& s2) {
  const Sign o1 = orient3d(t1, t2, t3, s1);
  const Sign o2 = orient3d(t1, t2, t3, s2);
  if (o1 == Sign::Zero || o2 == Sign::Zero)
    throw DegeneracyError("segment endpoint coplanar with triangle");
  if (o1 == o2) return false;
  const Sign w1 = orient3d(s1, s2, t1, t2);
  const Sign w2 = orient3d(s1, s2, t2, t3);
  const Sign w3 = orient3d(s1, s2, t3, t1);
  if (w1 == Sign::Zero || w2 == Sign::Zero || w3 == Sign::Zero)
    throw DegeneracyError("segment line coplanar with a triangle edge");
  return w1 == w2 && w2 == w3;
}

/// Signed piercing indicator of segment j->k through triangle (i1, i2, i3):
/// zero when they miss, otherwise the sign of (i1i2 x i2i3) . jk.
template <class T>
Sign epsilon(const Vec3<T>& i1, const Vec3<T>& i2, const Vec3<T>& i3, const Vec3<T>& j,
             const Vec3<T>& k) {
  if (!segment_pierces_triangle(i1, i2, i3, j, k)) return Sign::Zero;
  return sign_of(dot(cross(i2 - i1, i3 - i2), k - j));
}

namespace detail {

template <class T>
bool any_four_coplanar(std::span<const Vec3<T>> pts) {
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (orient3d(pts[a], pts[b], pts[c], pts[d]) == Sign::Zero) return true;
  return false;
}

}  // namespace detail

/// Coordinates scaled to integers by a common positive factor. Small images
/// use __int128 (every polynomial evaluated downstream stays far below its
/// range for |coordinate| <= kSmallLimit); anything larger uses cpp_int.
using IntegerImage = std::variant<std::vector<Vec3<Int128>>, std::vector<Vec3<BigInt>>>;

inline constexpr long long kSmallLimit = 1LL << 21;

/// n labeled points in general position: pairwise distinct and no four
/// coplanar. Immutable once built.
class Configuration {
 public:
  explicit Configuration(std::vector<Point3> points) : points_(std::move(points)) {
    if (points_.size() < 4)
      throw PreconditionError("configuration needs at least 4 points");
    if (points_.size() > 9)
      throw PreconditionError("configuration supports at most 9 points");
    for (std::size_t a = 0; a < points_.size(); ++a)
      for (std::size_t b = a + 1; b < points_.size(); ++b)
        if (points_[a] == points_[b])
          throw DegeneracyError("points " + std::to_string(a + 1) + " and " +
                                std::to_string(b + 1) + " coincide");
    build_image();
    std::visit(
        [](const auto& img) {
          using V = typename std::decay_t<decltype(img)>::value_type;
          if (detail::any_four_coplanar(std::span<const V>(img)))
            throw DegeneracyError("four points are coplanar");
        },
        image_);
  }

  std::size_t size() const noexcept { return points_.size(); }
  const Point3& point(Vertex v) const { return points_.at(index(v)); }
  std::span<const Point3> points() const noexcept { return points_; }
  const IntegerImage& image() const noexcept { return image_; }

  std::size_t index(Vertex v) const {
    if (v < 1 || static_cast<std::size_t>(v) > points_.size())
      throw PreconditionError("vertex label " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v - 1);
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.points_ == b.points_;
  }

 private:
  void build_image() {
    BigInt scale = 1;
    for (const auto& p : points_)
      for (const Scalar* c : {&p.x, &p.y, &p.z}) {
        const BigInt& d = boost::multiprecision::denominator(*c);
        scale = scale / boost::multiprecision::gcd(scale, d) * d;
      }
    std::vector<Vec3<BigInt>> big;
    big.reserve(points_.size());
    bool small = true;
    auto lift = [&](const Scalar& c) {
      BigInt v = boost::multiprecision::numerator(c) * (scale / boost::multiprecision::denominator(c));
      if (boost::multiprecision::abs(v) > kSmallLimit) small = false;
      return v;
    };
    for (const auto& p : points_) big.push_back({lift(p.x), lift(p.y), lift(p.z)});
    if (!small) {
      image_ = std::move(big);
      return;
    }
    std::vector<Vec3<Int128>> fast;
    fast.reserve(big.size());
    for (const auto& p : big)
      fast.push_back({static_cast<long long>(p.x), static_cast<long long>(p.y),
                      static_cast<long long>(p.z)});
    image_ = std::move(fast);
  }

  std::vector<Point3> points_;
  IntegerImage image_;
};

/// Visit the integer image with a generic callable taking (span of Vec3<Int>).
template <class F>
decltype(auto) with_image(const Configuration& c, F&& f) {
  return std::visit(
      [&](const auto& img) -> decltype(auto) {
        using V = typename std::decay_t<decltype(img)>::value_type;
        return f(std::span<const V>(img));
      },
      c.image());
}

inline Sign epsilon(const Configuration& c, Vertex i1, Vertex i2, Vertex i3, Vertex j, Vertex k) {
  const std::array<Vertex, 5> all{i1, i2, i3, j, k};
  for (std::size_t a = 0; a < all.size(); ++a) {
    c.index(all[a]);
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (all[a] == all[b])
        throw PreconditionError("epsilon: triangle and edge must use five distinct vertices");
  }
  return with_image(c, [&](auto pts) {
    return epsilon(pts[c.index(i1)], pts[c.index(i2)], pts[c.index(i3)], pts[c.index(j)],
                   pts[c.index(k)]);
  });
}

inline Sign side_of_plane(const Configuration& c, Vertex i, Vertex j, Vertex k, Vertex p) {
  return with_image(c, [&](auto pts) {
    return side_of_plane(pts[c.index(i)], pts[c.index(j)], pts[c.index(k)], pts[c.index(p)]);
  });
}

inline Point3 make_point(long long x, long long y, long long z) {
  return {Scalar(x), Scalar(y), Scalar(z)};
}

}  // namespace stickknot
