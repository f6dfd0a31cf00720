#include "folb/prelude.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>

#include "folb/data_store.hpp"
#include "folb/errors.hpp"
#include "folb/families.hpp"
#include "folb/metric.hpp"

namespace folb {

namespace {

constexpr std::size_t kMaxExpandedNodes = 20'000'000;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Vertex order that keeps every prefix connected where possible, so nested
// existentials in pattern formulas prune early.
std::vector<Vertex> search_order(const Graph& h) {
  std::vector<Vertex> order;
  std::vector<char> seen(h.order(), 0);
  for (Vertex s = 0; s < h.order(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      Vertex u = order[head++];
      for (Vertex w : h.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    }
  }
  return order;
}

template <class Constraint>
std::string pattern_formula(const Graph& h, Constraint&& constraint) {
  const int k = h.order();
  if (k == 0) return "forall p0 p0 = p0";
  std::vector<Vertex> order = search_order(h);
  auto var = [](int i) { return "p" + std::to_string(i); };
  std::string out = "exists " + var(0) + " ";
  if (k == 1) return out + var(0) + " = " + var(0);
  int open = 0;
  for (int i = 1; i < k; ++i) {
    out += "exists " + var(i) + " (";
    ++open;
    for (int j = 0; j < i; ++j) {
      if (j) out += " & ";
      out += constraint(order[j], order[i], var(j), var(i));
    }
    if (i + 1 < k) out += " & ";
  }
  out += std::string(open, ')');
  return out;
}

struct ListSpec {
  const char* list;
  const char* kind;  // "subgraph" or "isometric"
  std::vector<std::string> labels;
};

const std::vector<ListSpec>& data_lists() {
  static const std::vector<ListSpec> lists = {
      {"pseudo_median_H", "subgraph", {"H1", "H2", "H3", "H4"}},
      {"beineke_F_primed", "subgraph", {"F0p", "F1p", "F2p", "F3p", "F4p", "F5p", "F6p", "F7p", "F8p"}},
      {"half_hyperbolic_H", "isometric", {"Ha", "Hb", "Hc", "Hd"}},
  };
  return lists;
}

class Expander {
 public:
  Expander(const Prelude& prelude, std::vector<std::string> free_names)
      : prelude_(prelude), slot_names_(std::move(free_names)) {
    for (int i = 0; i < static_cast<int>(slot_names_.size()); ++i) scope_.emplace_back(slot_names_[i], i);
    free_count_ = static_cast<int>(slot_names_.size());
  }

  std::shared_ptr<Node> expand(const Syntax& s) {
    if (++nodes_ > kMaxExpandedNodes) throw Error("formula expansion exceeds " + std::to_string(kMaxExpandedNodes) + " nodes");
    auto n = std::make_shared<Node>();
    switch (s.kind) {
      case Syntax::Kind::Between:
        n->op = Op::Between;
        n->a = resolve(s.vars[0], s.pos);
        n->b = resolve(s.vars[1], s.pos);
        n->c = resolve(s.vars[2], s.pos);
        return n;
      case Syntax::Kind::Edge:
        n->op = Op::Edge;
        n->a = resolve(s.vars[0], s.pos);
        n->b = resolve(s.vars[1], s.pos);
        return n;
      case Syntax::Kind::Equal:
      case Syntax::Kind::NotEqual: {
        n->op = Op::Equal;
        n->a = resolve(s.vars[0], s.pos);
        n->b = resolve(s.vars[1], s.pos);
        if (s.kind == Syntax::Kind::Equal) return n;
        auto neg = std::make_shared<Node>();
        neg->op = Op::Not;
        neg->kids.push_back(n);
        return neg;
      }
      case Syntax::Kind::Not:
      case Syntax::Kind::And:
      case Syntax::Kind::Or:
      case Syntax::Kind::Implies:
      case Syntax::Kind::Iff:
        n->op = s.kind == Syntax::Kind::Not       ? Op::Not
                : s.kind == Syntax::Kind::And     ? Op::And
                : s.kind == Syntax::Kind::Or      ? Op::Or
                : s.kind == Syntax::Kind::Implies ? Op::Implies
                                                  : Op::Iff;
        for (const auto& k : s.kids) n->kids.push_back(expand(*k));
        return n;
      case Syntax::Kind::Forall:
      case Syntax::Kind::Exists: {
        n->op = s.kind == Syntax::Kind::Forall ? Op::Forall : Op::Exists;
        n->a = static_cast<int>(slot_names_.size());
        slot_names_.push_back(s.vars[0]);
        scope_.emplace_back(s.vars[0], n->a);
        n->kids.push_back(expand(*s.kids[0]));
        scope_.pop_back();
        return n;
      }
      case Syntax::Kind::Call:
        return expand_call(s);
    }
    throw Error("unreachable syntax kind");
  }

  Formula finish(std::shared_ptr<Node> root, const std::string& source) {
    return Formula(std::move(root), std::move(slot_names_), free_count_, source);
  }

 private:
  int resolve(const std::string& name, std::size_t pos) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return it->second;
    throw UnboundVariable("unbound variable '" + name + "'", pos);
  }

  std::shared_ptr<Node> expand_call(const Syntax& s) {
    const MacroDef* def = prelude_.find(s.name);
    if (!def) throw UnknownMacro("unknown macro '" + s.name + "'", s.pos);
    if (def->params.size() != s.vars.size())
      throw ArityMismatch("macro '" + s.name + "' takes " + std::to_string(def->params.size()) + " arguments, got " +
                              std::to_string(s.vars.size()),
                          s.pos);
    if (!def->body) throw MissingData("macro '" + s.name + "' is unavailable: " + def->unavailable);
    std::vector<std::pair<std::string, int>> inner;
    for (std::size_t i = 0; i < s.vars.size(); ++i) inner.emplace_back(def->params[i], resolve(s.vars[i], s.pos));
    std::swap(scope_, inner);
    std::shared_ptr<Node> body;
    try {
      body = expand(*def->body);
    } catch (...) {
      std::swap(scope_, inner);
      throw;
    }
    std::swap(scope_, inner);
    if (body->label.empty()) body->label = def->name;
    return body;
  }

  const Prelude& prelude_;
  std::vector<std::string> slot_names_;
  std::vector<std::pair<std::string, int>> scope_;
  int free_count_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

std::string induced_pattern_formula(const Graph& pattern) {
  return pattern_formula(pattern, [&](Vertex a, Vertex b, const std::string& va, const std::string& vb) {
    if (pattern.adjacent(a, b)) return "E(" + va + "," + vb + ")";
    return va + " != " + vb + " & !E(" + va + "," + vb + ")";
  });
}

std::string isometric_pattern_formula(const Graph& pattern) {
  MetricOracle m(pattern);
  return pattern_formula(pattern, [&](Vertex a, Vertex b, const std::string& va, const std::string& vb) {
    return "dist_" + std::to_string(m.dist(a, b)) + "(" + va + "," + vb + ")";
  });
}

// ---------------------------------------------------------------------------

const MacroDef* Prelude::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &defs_[it->second];
}

std::vector<std::string> Prelude::sentence_names() const {
  std::vector<std::string> out;
  for (const auto& d : defs_)
    if (d.params.empty()) out.push_back(d.name);
  return out;
}

void Prelude::define(const std::string& name, const std::vector<std::string>& params, const std::string& body,
                     const std::string& origin) {
  auto where = [&](const std::string& msg) { return origin + ": " + msg; };
  if (!valid_identifier(name)) throw FormatError(where("invalid macro name '" + name + "'"));
  if (index_.count(name)) throw FormatError(where("duplicate definition of '" + name + "'"));
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!valid_identifier(params[i])) throw FormatError(where("invalid parameter name '" + params[i] + "'"));
    for (std::size_t j = 0; j < i; ++j)
      if (params[i] == params[j]) throw FormatError(where("repeated parameter '" + params[i] + "'"));
  }
  SyntaxPtr syntax;
  try {
    syntax = parse_syntax(body);
  } catch (const SyntaxError& e) {
    throw SyntaxError(where(std::string("in '") + name + "': " + e.what()), e.position(), e.expected());
  }
  for (const auto& v : free_names(*syntax))
    if (std::find(params.begin(), params.end(), v) == params.end())
      throw UnboundVariable(where("variable '" + v + "' is free in '" + name + "' but not a parameter"), 0);
  std::vector<CallSite> calls;
  collect_calls(*syntax, calls);
  for (const auto& c : calls) {
    const MacroDef* d = find(c.name);
    if (!d) throw UnknownMacro(where("'" + name + "' uses undefined macro '" + c.name + "'"), c.pos);
    if (d->params.size() != c.arity)
      throw ArityMismatch(where("'" + name + "' calls '" + c.name + "' with " + std::to_string(c.arity) +
                                " arguments, expected " + std::to_string(d->params.size())),
                          c.pos);
  }
  index_[name] = defs_.size();
  defs_.push_back({name, params, syntax, {}, origin, body});
}

void Prelude::define_unavailable(const std::string& name, std::size_t arity, const std::string& reason) {
  if (index_.count(name)) throw FormatError("duplicate definition of '" + name + "'");
  std::vector<std::string> params;
  for (std::size_t i = 0; i < arity; ++i) params.push_back("a" + std::to_string(i));
  index_[name] = defs_.size();
  defs_.push_back({name, params, nullptr, reason, "generated", {}});
}

void Prelude::ensure_distance_macros(int k) {
  for (int d = distance_bound_ + 1; d <= k; ++d) {
    const std::string ds = std::to_string(d);
    if (d == 0) {
      define("dist_0", {"x", "y"}, "x = y");
      define("dist_le_0", {"x", "y"}, "x = y");
      continue;
    }
    if (d == 1) define("dist_1", {"x", "y"}, "E(x,y)");
    else define("dist_" + ds, {"x", "y"}, "exists z (E(x,z) & B(x,z,y) & dist_" + std::to_string(d - 1) + "(z,y))");
    define("dist_le_" + ds, {"x", "y"}, "dist_le_" + std::to_string(d - 1) + "(x,y) | dist_" + ds + "(x,y)");
  }
  distance_bound_ = std::max(distance_bound_, k);
}

void Prelude::define_pattern(const std::string& name, const Graph& pattern) {
  define("subgraph_" + name, {}, induced_pattern_formula(pattern));
  if (pattern.is_connected()) {
    ensure_distance_macros(MetricOracle(pattern).diameter());
    define("isometric_" + name, {}, isometric_pattern_formula(pattern));
  }
}

Prelude Prelude::builtin(const PreludeOptions& options) {
  Prelude p;
  p.ensure_distance_macros(std::max(1, options.distance_bound));

  using namespace families;
  p.define_pattern("c4", cycle(4));
  p.define_pattern("c5", cycle(5));
  p.define_pattern("k4_minus", k4_minus());
  p.define_pattern("k23", complete_bipartite(2, 3));
  p.define_pattern("k33_minus", k33_minus());
  p.define_pattern("w4", wheel(4));
  p.define_pattern("w4_minus", almost_wheel(4));
  p.define_pattern("three_fan", three_fan());

  for (int k = 0; k <= p.distance_bound_; ++k)
    p.define("interval_delta_slim_" + std::to_string(k), {},
             "forall x forall y forall z forall u B(y,u,z) -> exists v (B(x,v,y) | B(x,v,z)) & dist_le_" +
                 std::to_string(k) + "(u,v)");

  for (const auto& spec : data_lists()) {
    std::string list_macro = std::string(spec.kind) + "_" + spec.list;
    std::string reason;
    std::vector<Graph> graphs;
    if (options.load_data_lists) {
      try {
        graphs = forbidden_list(spec.list);
        if (graphs.size() != spec.labels.size())
          reason = std::string(spec.list) + " has " + std::to_string(graphs.size()) + " entries, expected " +
                   std::to_string(spec.labels.size());
      } catch (const MissingData& e) {
        reason = e.what();
      }
    } else {
      reason = "data lists disabled";
    }
    if (!reason.empty()) {
      for (const auto& label : spec.labels) p.define_unavailable(std::string(spec.kind) + "_" + label, 0, reason);
      p.define_unavailable(list_macro, 0, reason);
      continue;
    }
    std::string disjunction;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const std::string& label = spec.labels[i];
      std::string kind = spec.kind;
      std::string body = kind == "subgraph" ? induced_pattern_formula(graphs[i]) : isometric_pattern_formula(graphs[i]);
      if (kind == "isometric") p.ensure_distance_macros(MetricOracle(graphs[i]).diameter());
      p.define(kind + "_" + label, {}, body);
      disjunction += (i ? " | " : "") + kind + "_" + label;
    }
    p.define(list_macro, {}, disjunction);
  }
  return p;
}

void Prelude::add_definitions(const std::string& text, const std::string& origin) {
  struct Block {
    int line;
    std::string text;
  };
  std::vector<Block> blocks;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.rfind("def", 0) == 0 && (t.size() == 3 || std::isspace(static_cast<unsigned char>(t[3])))) {
      blocks.push_back({lineno, t});
    } else {
      if (blocks.empty()) throw FormatError(origin + ":" + std::to_string(lineno) + ": text outside a definition");
      blocks.back().text += " " + t;
    }
  }
  for (const auto& b : blocks) {
    std::string where = origin + ":" + std::to_string(b.line);
    auto assign = b.text.find(":=");
    if (assign == std::string::npos) throw FormatError(where + ": missing ':='");
    std::string head = trim(b.text.substr(3, assign - 3));
    std::string body = trim(b.text.substr(assign + 2));
    std::string name = head;
    std::vector<std::string> params;
    if (auto open = head.find('('); open != std::string::npos) {
      auto close = head.find(')', open);
      if (close == std::string::npos || trim(head.substr(close + 1)) != "")
        throw FormatError(where + ": malformed parameter list");
      name = trim(head.substr(0, open));
      std::istringstream ps(head.substr(open + 1, close - open - 1));
      std::string p;
      while (std::getline(ps, p, ',')) {
        p = trim(p);
        if (!p.empty()) params.push_back(p);
      }
    }
    if (body.empty()) throw FormatError(where + ": empty definition");
    define(name, params, body, where);
  }
}

Prelude Prelude::from_text(const std::string& text, const std::string& origin, const PreludeOptions& options) {
  Prelude p = builtin(options);
  p.add_definitions(text, origin);
  return p;
}

Prelude Prelude::load(const std::filesystem::path& file, const PreludeOptions& options) {
  std::ifstream in(file);
  if (!in) throw MissingData("prelude not found: " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), file.filename().string(), options);
}

const Prelude& Prelude::standard() {
  static const Prelude p = load(default_prelude_path());
  return p;
}

// ---------------------------------------------------------------------------

Formula parse(const std::string& text, const Prelude& prelude, const ParseOptions& options) {
  SyntaxPtr syntax = parse_syntax(text);
  std::vector<std::string> names = free_names(*syntax);
  if (options.free_variables) {
    for (const auto& v : names)
      if (std::find(options.free_variables->begin(), options.free_variables->end(), v) ==
          options.free_variables->end())
        throw UnboundVariable("variable '" + v + "' is free but not declared", 0);
    names = *options.free_variables;
  }
  Expander ex(prelude, names);
  auto root = ex.expand(*syntax);
  return ex.finish(std::move(root), text);
}

Formula sentence(const Prelude& prelude, const std::string& name) {
  const MacroDef* def = prelude.find(name);
  if (!def) throw UnknownMacro("unknown sentence '" + name + "'", 0);
  if (!def->params.empty())
    throw ArityMismatch("'" + name + "' takes " + std::to_string(def->params.size()) + " arguments", 0);
  return parse(name, prelude);
}

}  // namespace folb
