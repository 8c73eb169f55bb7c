#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "stickknot/errors.hpp"
#include "stickknot/geometry.hpp"

namespace stickknot {

/// A closed polygon through distinct vertices, up to rotation and reflection.
///
/// Stored in canonical form: the smallest label first, and the second label
/// smaller than the last. Two sequences describing the same cycle compare
/// equal.
class Cycle {
 public:
  Cycle() = default;

  explicit Cycle(std::vector<Vertex> sequence) : v_(std::move(sequence)) {
    if (v_.size() < 3) throw PreconditionError("cycle needs at least 3 vertices");
    auto sorted = v_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("cycle repeats a vertex");
    if (sorted.front() < 1) throw PreconditionError("cycle labels start at 1");
    std::rotate(v_.begin(), std::min_element(v_.begin(), v_.end()), v_.end());
    if (v_[1] > v_.back()) std::reverse(v_.begin() + 1, v_.end());
  }

  /// Accepts "1234567" or any separator-delimited list such as "1-2-3".
  static Cycle parse(std::string_view text) {
    std::vector<Vertex> seq;
    const bool has_sep =
        std::any_of(text.begin(), text.end(), [](char ch) { return !std::isdigit(static_cast<unsigned char>(ch)); });
    if (!has_sep) {
      for (char ch : text) seq.push_back(ch - '0');
    } else {
      int cur = -1;
      for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
        } else if (ch == '-' || ch == ',' || ch == ' ') {
          if (cur >= 0) seq.push_back(cur);
          cur = -1;
        } else {
          throw PreconditionError(std::string("bad character in cycle: '") + ch + "'");
        }
      }
      if (cur >= 0) seq.push_back(cur);
    }
    if (seq.empty()) throw PreconditionError("empty cycle");
    return Cycle(std::move(seq));
  }

  std::size_t size() const noexcept { return v_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return v_; }
  Vertex operator[](std::size_t i) const { return v_[i % v_.size()]; }

  bool contains(Vertex x) const { return std::find(v_.begin(), v_.end(), x) != v_.end(); }

  std::string to_string() const {
    const bool compact = std::all_of(v_.begin(), v_.end(), [](Vertex x) { return x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (!compact && i > 0) out += '-';
      out += std::to_string(v_[i]);
    }
    return out;
  }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> v_;
};

}  // namespace stickknot
