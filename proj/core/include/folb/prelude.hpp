#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folb/formula.hpp"
#include "folb/graph.hpp"
#include "folb/parser.hpp"

namespace folb {

struct MacroDef {
  std::string name;
  std::vector<std::string> params;
  SyntaxPtr body;            // null when the macro is unavailable
  std::string unavailable;   // reason, e.g. a missing data file
  std::string origin;        // "file:line" or "generated"
  std::string text;          // body source
};

struct PreludeOptions {
  // dist_k and dist_le_k are generated for k <= distance_bound (and further
  // when a generated pattern needs a larger distance).
  int distance_bound = 6;
  // Load the bundled forbidden-subgraph lists and generate their macros.
  bool load_data_lists = true;
};

// An ordered set of macro definitions. Later definitions may use earlier
// ones; references are checked when a definition is added, so cycles are
// impossible.
class Prelude {
 public:
  Prelude() = default;

  // Generated macros only: distances, built-in subgraph patterns, data lists.
  static Prelude builtin(const PreludeOptions& options = {});
  // Generated macros followed by the definitions in a prelude file.
  static Prelude load(const std::filesystem::path& file, const PreludeOptions& options = {});
  // Generated macros followed by definitions from text.
  static Prelude from_text(const std::string& text, const std::string& origin, const PreludeOptions& options = {});
  // The bundled prelude (honours FOLB_PRELUDE).
  static const Prelude& standard();

  // Parses "def name(args) := formula" blocks. A definition runs until the
  // next line starting with "def"; '#' starts a comment.
  void add_definitions(const std::string& text, const std::string& origin);
  void define(const std::string& name, const std::vector<std::string>& params, const std::string& body,
              const std::string& origin = "generated");
  void define_unavailable(const std::string& name, std::size_t arity, const std::string& reason);

  // Adds subgraph_<name> (induced) and isometric_<name> for a pattern graph.
  void define_pattern(const std::string& name, const Graph& pattern);

  const MacroDef* find(const std::string& name) const;
  const std::vector<MacroDef>& definitions() const noexcept { return defs_; }
  // Parameterless definitions, in definition order.
  std::vector<std::string> sentence_names() const;
  int distance_bound() const noexcept { return distance_bound_; }

 private:
  void ensure_distance_macros(int k);

  std::vector<MacroDef> defs_;
  std::map<std::string, std::size_t> index_;
  int distance_bound_ = -1;
};

struct ParseOptions {
  // When set, these are the only allowed free variables (in this order);
  // otherwise free variables are collected in order of first occurrence.
  std::optional<std::vector<std::string>> free_variables;
};

// Parses and fully expands a formula. Errors: SyntaxError, UnknownMacro,
// ArityMismatch, UnboundVariable; MissingData if an unavailable macro is used.
Formula parse(const std::string& text, const Prelude& prelude, const ParseOptions& options = {});

// Expands a parameterless prelude macro.
Formula sentence(const Prelude& prelude, const std::string& name);

// Text of the generated formulas, exposed for tests.
std::string induced_pattern_formula(const Graph& pattern);
std::string isometric_pattern_formula(const Graph& pattern);

}  // namespace folb
