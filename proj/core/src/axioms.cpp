#include "folb/axioms.hpp"

#include <optional>

#include "folb/errors.hpp"

namespace folb {

TernaryRelation::TernaryRelation(int m) : m_(m) {
  if (m < 0) throw BadParams("universe size must be nonnegative");
  bits_.assign(static_cast<std::size_t>(m) * m * m, false);
}

TernaryRelation TernaryRelation::from_metric(const MetricOracle& metric) {
  const int n = metric.order();
  TernaryRelation r(n);
  for (int u = 0; u < n; ++u)
    for (int x = 0; x < n; ++x)
      for (int v = 0; v < n; ++v)
        if (metric.between(u, x, v)) r.insert(u, x, v);
  return r;
}

void TernaryRelation::insert(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a >= m_ || b >= m_ || c >= m_)
    throw BadParams("triple out of range");
  auto bit = bits_[index(a, b, c)];
  if (!bit) {
    bit = true;
    ++count_;
  }
}

void TernaryRelation::erase(int a, int b, int c) {
  auto bit = bits_[index(a, b, c)];
  if (bit) {
    bit = false;
    --count_;
  }
}

std::vector<std::array<int, 3>> TernaryRelation::triples() const {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      for (int c = 0; c < m_; ++c)
        if (contains(a, b, c)) out.push_back({a, b, c});
  return out;
}

namespace {

template <class Pred>
std::optional<std::vector<int>> least_counterexample2(int m, Pred&& ok) {
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (!ok(a, b)) return std::vector<int>{a, b};
  return std::nullopt;
}

template <class Pred>
std::optional<std::vector<int>> least_counterexample3(int m, Pred&& ok) {
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (!ok(a, b, c)) return std::vector<int>{a, b, c};
  return std::nullopt;
}

template <class Pred>
std::optional<std::vector<int>> least_counterexample4(int m, Pred&& ok) {
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          if (!ok(a, b, c, d)) return std::vector<int>{a, b, c, d};
  return std::nullopt;
}

}  // namespace

std::vector<AxiomViolation> check_axioms(const TernaryRelation& r) {
  const int m = r.universe();
  auto B = [&](int a, int b, int c) { return r.contains(a, b, c); };

  std::vector<char> edge(static_cast<std::size_t>(m) * m, 0);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (u == v) continue;
      bool only_ends = true;
      for (int x = 0; x < m && only_ends; ++x)
        if (x != u && x != v && B(u, x, v)) only_ends = false;
      edge[static_cast<std::size_t>(u) * m + v] = only_ends;
    }
  auto E = [&](int a, int b) { return edge[static_cast<std::size_t>(a) * m + b] != 0; };

  std::vector<AxiomViolation> out;
  auto report = [&](const char* tag, std::optional<std::vector<int>> w) {
    if (w) out.push_back({tag, std::move(*w)});
  };

  report("IB1", least_counterexample2(m, [&](int u, int v) { return B(u, u, v); }));
  report("IB2", least_counterexample3(m, [&](int u, int x, int v) { return !B(u, x, v) || B(v, x, u); }));
  report("IB3", least_counterexample2(m, [&](int u, int x) { return !B(u, x, u) || x == u; }));
  report("IB4", least_counterexample4(m, [&](int u, int v, int w, int x) {
           return !(B(u, w, v) && B(u, x, w)) || B(u, x, v);
         }));
  report("IB5", least_counterexample4(m, [&](int u, int v, int w, int x) {
           return !(B(u, v, x) && B(u, w, x) && B(u, v, w)) || B(v, w, x);
         }));
  report("IB6", least_counterexample4(m, [&](int u, int u1, int v, int v1) {
           return !(E(u, u1) && E(v, v1) && B(u1, u, v1) && B(u, u1, v) && B(u, v1, v)) || B(u1, v, v1);
         }));
  report("IB7", least_counterexample4(m, [&](int u, int u1, int v, int v1) {
           return !(E(u, u1) && E(v, v1) && B(u, u1, v) && !B(u, v1, v) && !B(u1, v, v1)) || B(u, u1, v1);
         }));
  return out;
}

}  // namespace folb
