#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "folb/axioms.hpp"
#include "folb/corpus.hpp"
#include "folb/ef_game.hpp"
#include "folb/errors.hpp"
#include "folb/evaluator.hpp"
#include "folb/families.hpp"
#include "folb/graph_io.hpp"
#include "folb/hyperbolicity.hpp"
#include "folb/prelude.hpp"
#include "folb/recognizers.hpp"

namespace folb::cli {

namespace {

using nlohmann::json;

const BigInt kCostWarning("10000000000");

enum class Format { Human, Tsv, Jsonl };

struct Settings {
  std::string format = "human";
  std::uint64_t budget = 0;
  bool force = false;
};

struct Record {
  std::string kind;
  std::string subject;
  std::string result;
  std::vector<std::string> witness;  // printable pieces
  std::string cost;                  // empty when not applicable
};

// Emits records in the selected format. Human output is a short line per
// record; tsv is kind-less `subject result witness`; jsonl is one object.
class Printer {
 public:
  Printer(std::ostream& out, Format format) : out_(out), format_(format) {}

  void emit(const Record& r) {
    std::string witness;
    for (std::size_t i = 0; i < r.witness.size(); ++i) witness += (i ? " " : "") + r.witness[i];
    switch (format_) {
      case Format::Human:
        out_ << r.subject << '\t' << r.result;
        if (!witness.empty()) out_ << '\t' << witness;
        if (!r.cost.empty()) out_ << "\tcost " << r.cost;
        out_ << '\n';
        break;
      case Format::Tsv:
        out_ << r.subject << '\t' << r.result << '\t' << witness << '\n';
        break;
      case Format::Jsonl: {
        json j;
        j["kind"] = r.kind;
        j["subject"] = r.subject;
        j["result"] = r.result;
        j["witness"] = r.witness;
        j["cost"] = r.cost.empty() ? json(nullptr) : json(r.cost);
        out_ << j.dump() << '\n';
        break;
      }
    }
  }

  Format format() const noexcept { return format_; }

 private:
  std::ostream& out_;
  Format format_;
};

Format parse_format(const std::string& s) {
  if (s == "human") return Format::Human;
  if (s == "tsv") return Format::Tsv;
  if (s == "jsonl" || s == "json-lines") return Format::Jsonl;
  throw UsageError("unknown format '" + s + "' (human, tsv, jsonl)");
}

std::vector<std::string> verdict_witness(const Verdict& v) {
  std::vector<std::string> w;
  if (v.is_false()) {
    w.push_back(v.conjunct);
    for (Vertex x : v.witness) w.push_back(std::to_string(x));
  } else if (v.status == VerdictStatus::NotAvailable) {
    w.push_back(v.note);
  }
  return w;
}

Formula formula_from_argument(const std::string& text, const Prelude& prelude) {
  if (!text.empty() && text[0] == '@') return sentence(prelude, text.substr(1));
  return parse(text, prelude);
}

int cmd_eval(const Settings& s, Printer& p, std::ostream& err, const std::string& graph_src,
             const std::string& formula_text, const std::vector<std::string>& bindings) {
  const Graph g = load_graph(graph_src);
  const MetricOracle m(g);
  const Prelude& prelude = Prelude::standard();
  const Formula f = formula_from_argument(formula_text, prelude);
  const FormulaStats stats = analyze(f);
  const BigInt cost = cost_estimate(stats, g.order());
  if (cost > kCostWarning && !s.force) {
    err << "warning: estimated cost " << cost << " exceeds 1e10 operations; rerun with --force\n";
    return kDataOrResource;
  }
  Assignment env;
  for (const std::string& b : bindings) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("binding '" + b + "' is not name=vertex");
    env[b.substr(0, eq)] = std::stoi(b.substr(eq + 1));
  }
  const EvalResult r = evaluate(f, m, env, EvalOptions{s.budget, true});
  Record rec{"eval", formula_text, r.value ? "true" : "false", {}, cost.str()};
  for (const auto& [name, value] : r.witness.assignment) rec.witness.push_back(name + "=" + std::to_string(value));
  p.emit(rec);
  if (p.format() == Format::Human) {
    err << "quantifier rank " << stats.quantifier_rank << ", width " << stats.width << ", size " << stats.size
        << ", steps " << r.steps << '\n';
    if (!r.witness.trail.empty()) {
      err << "trail:";
      for (const auto& t : r.witness.trail) err << ' ' << t;
      err << '\n';
    }
  }
  return kComputed;
}

int cmd_recognize(const Settings& s, Printer& p, const std::string& graph_src, const std::string& class_id,
                  const std::string& via, const std::string& delta_text) {
  const Graph g = load_graph(graph_src);
  const MetricOracle m(g);
  if (class_id == "interval_delta_slim") {
    if (delta_text.empty()) throw UsageError("interval_delta_slim needs --delta");
    const Check c = interval_delta_slim(m, HalfInt::parse(delta_text));
    Record rec{"recognize", class_id, c.holds ? "true" : "false", {}, {}};
    if (!c.holds) {
      rec.witness.push_back(c.condition);
      for (Vertex x : c.witness) rec.witness.push_back(std::to_string(x));
    }
    p.emit(rec);
    return kComputed;
  }
  const ClassSpec& spec = class_spec(class_id);
  Verdict v;
  if (via == "direct") {
    v = recognize(spec, m);
  } else if (via == "sentence") {
    v = recognize_by_sentence(spec, m, EvalOptions{s.budget, true});
  } else {
    throw UsageError("--via must be direct or sentence");
  }
  p.emit({"recognize", class_id, to_string(v.status), verdict_witness(v), {}});
  return v.status == VerdictStatus::NotAvailable ? kDataOrResource : kComputed;
}

int cmd_classify(Printer& p, const std::string& graph_src) {
  const Graph g = load_graph(graph_src);
  for (const auto& [id, v] : classify_all(g)) p.emit({"classify", id, to_string(v.status), verdict_witness(v), {}});
  return kComputed;
}

int cmd_gen(std::ostream& out, const std::string& spec, const std::string& output) {
  const Graph g = generate(spec);
  if (output.empty()) {
    write_graph(out, g);
    return kComputed;
  }
  std::ofstream file(output);
  if (!file) throw MissingData("cannot write " + output);
  write_graph(file, g);
  return kComputed;
}

int cmd_ef(const Settings& s, Printer& p, const std::string& a_src, const std::string& b_src, int rounds) {
  const RelStructure a = load_relation(a_src);
  const RelStructure b = load_relation(b_src);
  GameOptions options;
  if (s.budget) options.node_budget = s.budget;
  const GameOutcome o = play(a, b, rounds, options);
  Record rec{"ef", a_src + " vs " + b_src, to_string(o.winner), {}, std::to_string(o.positions)};
  if (o.spoiler_strategy)
    rec.witness = {o.spoiler_strategy->in_first ? "first" : "second", std::to_string(o.spoiler_strategy->element)};
  p.emit(rec);
  return kComputed;
}

int cmd_axioms(Printer& p, const std::string& src) {
  const RelStructure r = load_relation(src);
  const auto violations = check_axioms(r);
  if (violations.empty()) p.emit({"axioms", src, "ok", {}, {}});
  for (const auto& v : violations) {
    Record rec{"axioms", src, v.axiom, {}, {}};
    for (int x : v.witness) rec.witness.push_back(std::to_string(x));
    p.emit(rec);
  }
  return kComputed;
}

int cmd_hyperbolicity(Printer& p, const std::string& graph_src, const std::string& delta_text) {
  const Graph g = load_graph(graph_src);
  const MetricOracle m(g);
  p.emit({"hyperbolicity", graph_src, delta_star(m).to_string(), {}, {}});
  if (!delta_text.empty()) {
    const HalfInt delta = HalfInt::parse(delta_text);
    const Check c = interval_delta_slim(m, delta);
    Record rec{"interval_delta_slim", delta.to_string(), c.holds ? "true" : "false", {}, {}};
    for (Vertex x : c.witness) rec.witness.push_back(std::to_string(x));
    p.emit(rec);
  }
  return kComputed;
}

int cmd_audit(Printer& p, const std::string& dir, int max_order) {
  std::vector<Graph> graphs;
  std::vector<std::string> names;
  if (!dir.empty()) {
    if (!std::filesystem::is_directory(dir)) throw MissingData("no such corpus directory: " + dir);
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      graphs.push_back(load_graph(f.string()));
      names.push_back(f.filename().string());
    }
  } else {
    graphs = corpus::connected_graphs_up_to(max_order);
    for (std::size_t i = 0; i < graphs.size(); ++i) names.push_back("#" + std::to_string(i));
  }
  const auto violations = implication_audit(graphs);
  for (const auto& v : violations)
    p.emit({"audit", names[v.graph_index], "violation", {v.implication.premise, "=>", v.implication.conclusion}, {}});
  p.emit({"audit", std::to_string(graphs.size()) + " graphs", violations.empty() ? "ok" : "violations",
          {std::to_string(violations.size())}, {}});
  return kComputed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betweenness logic toolkit for metric graph classes", "folb"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "Output format: human, tsv or jsonl")->capture_default_str();
  app.add_option("--budget", s.budget, "Evaluation step or game position budget (0 = default)");
  app.add_flag("--force", s.force, "Evaluate even above the cost warning threshold");

  std::string graph_a, graph_b, formula_text, class_id, family, output, via = "direct", delta, corpus_dir;
  std::vector<std::string> bindings;
  int rounds = 1;
  int max_order = 6;

  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a graph");
  eval->add_option("graph", graph_a, "Graph file or family spec")->required();
  eval->add_option("-f,--formula", formula_text, "Formula text, or @name for a prelude sentence")->required();
  eval->add_option("--let", bindings, "Bind a free variable: name=vertex");

  auto* rec = app.add_subcommand("recognize", "Decide membership in a graph class");
  rec->add_option("graph", graph_a)->required();
  rec->add_option("class", class_id, "Class id, see `classify`")->required();
  rec->add_option("--via", via, "direct or sentence")->capture_default_str();
  rec->add_option("--delta", delta, "delta for interval_delta_slim");

  auto* cls = app.add_subcommand("classify", "Run every registered recognizer");
  cls->add_option("graph", graph_a)->required();

  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  gen->add_option("family", family, "Family spec such as hypercube(3)")->required();
  gen->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* ef = app.add_subcommand("ef", "Solve the Ehrenfeucht-Fraisse game on two structures");
  ef->add_option("first", graph_a, "Graph or relation file")->required();
  ef->add_option("second", graph_b, "Graph or relation file")->required();
  ef->add_option("-r,--rounds", rounds)->required()->check(CLI::NonNegativeNumber);

  auto* ax = app.add_subcommand("axioms", "Check the graphic interval axioms");
  ax->add_option("source", graph_a, "Relation file, graph file or family spec")->required();

  auto* hyp = app.add_subcommand("hyperbolicity", "Exact four-point hyperbolicity");
  hyp->add_option("graph", graph_a)->required();
  hyp->add_option("--delta", delta, "Also test interval delta-slimness");

  auto* audit = app.add_subcommand("audit", "Check the class implication table on a corpus");
  audit->add_option("corpus", corpus_dir, "Directory of graph files");
  audit->add_option("--max-order", max_order, "Without a directory: all connected graphs up to this order")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kComputed : kUsage;
  }

  try {
    Printer p(out, parse_format(s.format));
    if (*eval) return cmd_eval(s, p, err, graph_a, formula_text, bindings);
    if (*rec) return cmd_recognize(s, p, graph_a, class_id, via, delta);
    if (*cls) return cmd_classify(p, graph_a);
    if (*gen) return cmd_gen(out, family, output);
    if (*ef) return cmd_ef(s, p, graph_a, graph_b, rounds);
    if (*ax) return cmd_axioms(p, graph_a);
    if (*hyp) return cmd_hyperbolicity(p, graph_a, delta);
    if (*audit) return cmd_audit(p, corpus_dir, max_order);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormulaError& e) {
    err << "error: " << e.what() << " (at offset " << e.position() << ")\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataOrResource;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace folb::cli
