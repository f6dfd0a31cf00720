#include "folb/hyperbolicity.hpp"

#include <algorithm>
#include <functional>
#include <regex>

#include "folb/errors.hpp"

namespace folb {

HalfInt HalfInt::parse(const std::string& text) {
  static const std::regex decimal(R"((\d+)(\.(0|5))?)");
  static const std::regex fraction(R"((\d+)/2)");
  std::smatch match;
  if (std::regex_match(text, match, decimal)) {
    const long whole = std::stol(match[1].str());
    return from_twice(2 * whole + (match[3].matched && match[3].str() == "5" ? 1 : 0));
  }
  if (std::regex_match(text, match, fraction)) return from_twice(std::stol(match[1].str()));
  throw BadParams("not a non-negative multiple of 1/2: " + text);
}

std::string HalfInt::to_string() const {
  return std::to_string(twice_ / 2) + (twice_ % 2 ? ".5" : "");
}

std::array<int, 3> distance_sums(const MetricOracle& m, Vertex u, Vertex v, Vertex x, Vertex y) {
  std::array<int, 3> s{m.dist(u, v) + m.dist(x, y), m.dist(u, x) + m.dist(v, y), m.dist(u, y) + m.dist(v, x)};
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

HalfInt delta_star(const MetricOracle& m) {
  const int n = m.order();
  long best = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex x = v + 1; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
          const auto s = distance_sums(m, u, v, x, y);
          best = std::max<long>(best, s[0] - s[1]);
        }
  return HalfInt::from_twice(best);
}

Check interval_delta_slim(const MetricOracle& m, HalfInt delta) {
  const int n = m.order();
  const std::string name = "interval_delta_slim_" + std::to_string(delta.floor());
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z) {
        const VertexSet sides = m.interval(x, y) | m.interval(x, z);
        for (Vertex u = 0; u < n; ++u) {
          if (!m.between(y, u, z)) continue;
          bool near = false;
          for (Vertex v = 0; v < n && !near; ++v) near = sides[v] && m.dist(u, v) <= delta.floor();
          if (!near) return Check::fail(name, {x, y, z, u});
        }
      }
  return Check::pass(name);
}

Check alpha_i_check(const MetricOracle& m, int i) {
  const int n = m.order();
  const std::string name = "alpha_" + std::to_string(i);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : m.graph().neighbors(v))
      for (Vertex u = 0; u < n; ++u) {
        if (!m.between(u, v, w)) continue;
        for (Vertex x = 0; x < n; ++x)
          if (m.between(v, w, x) && m.dist(u, x) < m.dist(u, v) + 1 + m.dist(w, x) - i)
            return Check::fail(name, {v, w, u, x});
      }
  return Check::pass(name);
}

}  // namespace folb
