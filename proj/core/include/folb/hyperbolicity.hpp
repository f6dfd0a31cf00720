#pragma once

#include <array>
#include <compare>
#include <string>

#include "folb/conditions.hpp"
#include "folb/metric.hpp"

namespace folb {

// A non-negative multiple of one half, stored doubled so that all arithmetic
// stays exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(long twice) { return HalfInt(twice); }
  static constexpr HalfInt whole(long value) { return HalfInt(2 * value); }
  // Accepts "2", "1.5", "0.5", "1/2", "3/2". Throws BadParams otherwise.
  static HalfInt parse(const std::string& text);

  constexpr long twice() const noexcept { return twice_; }
  constexpr long floor() const noexcept { return twice_ / 2; }
  constexpr bool is_integral() const noexcept { return twice_ % 2 == 0; }

  constexpr auto operator<=>(const HalfInt&) const = default;
  constexpr HalfInt operator*(long k) const { return HalfInt(twice_ * k); }

  std::string to_string() const;

 private:
  constexpr explicit HalfInt(long twice) : twice_(twice) {}
  long twice_ = 0;
};

// The three pairings' distance sums for four vertices, largest first.
std::array<int, 3> distance_sums(const MetricOracle& m, Vertex u, Vertex v, Vertex x, Vertex y);

// Largest half-gap between the two biggest distance sums over all 4-tuples.
HalfInt delta_star(const MetricOracle& m);

// Every vertex u of I(y,z) is within floor(delta) hops of I(x,y) or I(x,z).
// Witness (x, y, z, u).
Check interval_delta_slim(const MetricOracle& m, HalfInt delta);

// For every edge vw and u, x with v in I(u,w) and w in I(v,x):
// d(u,x) >= d(u,v) + d(v,w) + d(w,x) - i. Witness (v, w, u, x).
Check alpha_i_check(const MetricOracle& m, int i);

}  // namespace folb
