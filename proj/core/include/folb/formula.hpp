#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace folb {

// Fully macro-expanded formula. Variables are numbered slots: every quantifier
// owns a fresh slot and free variables get the lowest slots.
enum class Op : std::uint8_t { Between, Edge, Equal, Not, And, Or, Implies, Iff, Forall, Exists };

struct Node {
  Op op;
  // Atoms use up to three slots; quantifiers store the bound slot in a.
  int a = -1, b = -1, c = -1;
  std::vector<std::shared_ptr<const Node>> kids;
  // Name of the macro whose expansion produced this node, if any.
  std::string label;
};
using NodePtr = std::shared_ptr<const Node>;

class Formula {
 public:
  Formula() = default;
  Formula(NodePtr root, std::vector<std::string> slot_names, int free_count, std::string source)
      : root_(std::move(root)), slot_names_(std::move(slot_names)), free_count_(free_count), source_(std::move(source)) {}

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }
  int slot_count() const noexcept { return static_cast<int>(slot_names_.size()); }
  const std::string& slot_name(int slot) const { return slot_names_[slot]; }
  // Free variables occupy slots 0..free_count-1 in declaration order.
  int free_count() const noexcept { return free_count_; }
  std::vector<std::string> free_variables() const {
    return {slot_names_.begin(), slot_names_.begin() + free_count_};
  }
  bool closed() const noexcept { return free_count_ == 0; }
  const std::string& source() const noexcept { return source_; }

 private:
  NodePtr root_;
  std::vector<std::string> slot_names_;
  int free_count_ = 0;
  std::string source_;
};

struct FormulaStats {
  int quantifier_rank = 0;
  int width = 0;          // most free variables of any subformula
  std::size_t size = 0;   // node count of the expanded tree
};

FormulaStats analyze(const Formula& f);

using BigInt = boost::multiprecision::cpp_int;

// size * (n + 1 + n^3)^width: the model-checking bound for a structure with
// one ternary relation on n elements.
BigInt cost_estimate(const FormulaStats& stats, int n);
BigInt cost_estimate(const Formula& f, int n);

// Prints the expanded formula with fully parenthesized connectives.
std::string to_string(const Formula& f);

}  // namespace folb
