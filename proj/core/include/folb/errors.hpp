#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace folb {

// Root of every library exception. The CLI maps UsageError to exit code 1 and
// everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is disconnected") {}
  using Error::Error;
};

class DisconnectedPattern : public Error {
 public:
  DisconnectedPattern() : Error("pattern graph is disconnected") {}
};

class BadParams : public UsageError {
 public:
  using UsageError::UsageError;
};

class MissingData : public Error {
 public:
  using Error::Error;
};

class NotPartialCube : public Error {
 public:
  NotPartialCube() : Error("graph is not a partial cube") {}
};

class ResourceBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// Formula language errors carry a byte offset into the source text.
class FormulaError : public Error {
 public:
  FormulaError(const std::string& what, std::size_t pos) : Error(what), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

class SyntaxError : public FormulaError {
 public:
  SyntaxError(const std::string& what, std::size_t pos, std::vector<std::string> expected)
      : FormulaError(what, pos), expected_(std::move(expected)) {}
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::vector<std::string> expected_;
};

class UnknownMacro : public FormulaError {
 public:
  using FormulaError::FormulaError;
};

class ArityMismatch : public FormulaError {
 public:
  using FormulaError::FormulaError;
};

class UnboundVariable : public FormulaError {
 public:
  using FormulaError::FormulaError;
};

}  // namespace folb
