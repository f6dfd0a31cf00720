#pragma once

#include <memory>
#include <string>
#include <vector>

namespace folb {

// Surface syntax before macro expansion; variables are still names.
struct Syntax {
  enum class Kind { Between, Edge, Equal, NotEqual, Not, And, Or, Implies, Iff, Forall, Exists, Call };
  Kind kind;
  std::vector<std::string> vars;   // atom arguments, call arguments, or the bound variable
  std::vector<std::shared_ptr<const Syntax>> kids;
  std::string name;                // macro name for Call
  std::size_t pos = 0;             // byte offset into the source text
};
using SyntaxPtr = std::shared_ptr<const Syntax>;

// Grammar, loosest binding first:
//   formula := ("forall"|"exists") IDENT formula | iff
//   iff     := impl ("<->" iff)?
//   impl    := or ("->" impl)?
//   or      := and ("|" and)*
//   and     := not ("&" not)*
//   not     := "!" not | quantifier | atom
//   atom    := "B(" t "," t "," t ")" | "E(" t "," t ")" | t ("="|"!=") t
//            | IDENT "(" t ("," t)* ")" | IDENT | "(" formula ")"
// A quantifier may also open after a connective; its scope extends as far
// right as possible. A bare IDENT names a macro without parameters.
// Throws SyntaxError with the offending offset and the expected tokens.
SyntaxPtr parse_syntax(const std::string& text);

// Names of variables occurring free in a syntax tree, in order of first occurrence.
std::vector<std::string> free_names(const Syntax& s);

// Every macro called anywhere in the tree as (name, arity, offset).
struct CallSite {
  std::string name;
  std::size_t arity;
  std::size_t pos;
};
void collect_calls(const Syntax& s, std::vector<CallSite>& out);

}  // namespace folb
