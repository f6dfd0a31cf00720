#pragma once

#include <array>
#include <string>
#include <vector>

#include "folb/metric.hpp"

namespace folb {

// An arbitrary ternary relation on 0..m-1. Unlike MetricOracle it may violate
// the betweenness axioms; that is what check_axioms is for.
class TernaryRelation {
 public:
  TernaryRelation() = default;
  explicit TernaryRelation(int m);

  static TernaryRelation from_metric(const MetricOracle& metric);

  int universe() const noexcept { return m_; }
  bool contains(int a, int b, int c) const noexcept { return bits_[index(a, b, c)]; }
  void insert(int a, int b, int c);
  void erase(int a, int b, int c);
  std::size_t size() const noexcept { return count_; }
  std::vector<std::array<int, 3>> triples() const;

  bool operator==(const TernaryRelation& o) const { return m_ == o.m_ && bits_ == o.bits_; }

 private:
  std::size_t index(int a, int b, int c) const noexcept {
    return (static_cast<std::size_t>(a) * m_ + b) * m_ + c;
  }
  int m_ = 0;
  std::size_t count_ = 0;
  std::vector<bool> bits_;
};

struct AxiomViolation {
  std::string axiom;          // "IB1" .. "IB7"
  std::vector<int> witness;   // values of the axiom's variables, see below
};

// Checks the seven graphic-interval axioms. At most one violation per axiom
// is reported: the lexicographically least falsifying tuple. Variable order:
//   IB1 (u,v)            B(u,u,v)
//   IB2 (u,x,v)          B(u,x,v) -> B(v,x,u)
//   IB3 (u,x)            B(u,x,u) -> x=u
//   IB4 (u,v,w,x)        B(u,w,v) & B(u,x,w) -> B(u,x,v)
//   IB5 (u,v,w,x)        B(u,v,x) & B(u,w,x) & B(u,v,w) -> B(v,w,x)
//   IB6 (u,u',v,v')      E(u,u') & E(v,v') & B(u',u,v') & B(u,u',v) & B(u,v',v) -> B(u',v,v')
//   IB7 (u,u',v,v')      E(u,u') & E(v,v') & B(u,u',v) & !B(u,v',v) & !B(u',v,v') -> B(u,u',v')
// E is the edge predicate derived from the relation itself.
std::vector<AxiomViolation> check_axioms(const TernaryRelation& r);

}  // namespace folb
