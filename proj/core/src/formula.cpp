#include "folb/formula.hpp"

#include <algorithm>
#include <sstream>

namespace folb {

namespace {

struct Facts {
  int qr = 0;
  std::vector<int> free;  // sorted slots
};

Facts walk(const Node& n, FormulaStats& stats) {
  ++stats.size;
  Facts out;
  switch (n.op) {
    case Op::Between:
      out.free = {n.a, n.b, n.c};
      break;
    case Op::Edge:
    case Op::Equal:
      out.free = {n.a, n.b};
      break;
    case Op::Forall:
    case Op::Exists: {
      Facts body = walk(*n.kids[0], stats);
      out.qr = body.qr + 1;
      out.free = std::move(body.free);
      out.free.erase(std::remove(out.free.begin(), out.free.end(), n.a), out.free.end());
      break;
    }
    default:
      for (const auto& kid : n.kids) {
        Facts k = walk(*kid, stats);
        out.qr = std::max(out.qr, k.qr);
        std::vector<int> merged;
        std::set_union(out.free.begin(), out.free.end(), k.free.begin(), k.free.end(), std::back_inserter(merged));
        out.free = std::move(merged);
      }
      break;
  }
  if (n.op == Op::Between || n.op == Op::Edge || n.op == Op::Equal) {
    std::sort(out.free.begin(), out.free.end());
    out.free.erase(std::unique(out.free.begin(), out.free.end()), out.free.end());
  }
  stats.width = std::max(stats.width, static_cast<int>(out.free.size()));
  return out;
}

void print(std::ostream& os, const Formula& f, const Node& n) {
  auto var = [&](int slot) -> const std::string& { return f.slot_name(slot); };
  switch (n.op) {
    case Op::Between:
      os << "B(" << var(n.a) << ',' << var(n.b) << ',' << var(n.c) << ')';
      return;
    case Op::Edge:
      os << "E(" << var(n.a) << ',' << var(n.b) << ')';
      return;
    case Op::Equal:
      os << var(n.a) << " = " << var(n.b);
      return;
    case Op::Not:
      os << '!';
      print(os, f, *n.kids[0]);
      return;
    case Op::Forall:
    case Op::Exists:
      os << '(' << (n.op == Op::Forall ? "forall " : "exists ") << var(n.a) << ' ';
      print(os, f, *n.kids[0]);
      os << ')';
      return;
    default:
      break;
  }
  const char* sep = n.op == Op::And ? " & " : n.op == Op::Or ? " | " : n.op == Op::Implies ? " -> " : " <-> ";
  os << '(';
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    if (i) os << sep;
    print(os, f, *n.kids[i]);
  }
  os << ')';
}

}  // namespace

FormulaStats analyze(const Formula& f) {
  FormulaStats stats;
  Facts top = walk(f.root(), stats);
  stats.quantifier_rank = top.qr;
  return stats;
}

BigInt cost_estimate(const FormulaStats& stats, int n) {
  BigInt structure = BigInt(n) + 1 + BigInt(n) * n * n;
  BigInt cost = stats.size;
  for (int i = 0; i < stats.width; ++i) cost *= structure;
  return cost;
}

BigInt cost_estimate(const Formula& f, int n) { return cost_estimate(analyze(f), n); }

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f, f.root());
  return os.str();
}

}  // namespace folb
