#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dakc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (e.g. solve_k1 with k != 1).
class ContractError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine refused to run because its enumeration would exceed
// the configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

enum class ArcDefect { kSelfLoop, kDuplicateArc, kVertexOutOfRange };

// Raised when an arc list does not describe a simple loop-free digraph.
class GraphError : public Error {
 public:
  GraphError(ArcDefect defect, const std::string& what) : Error(what), defect_(defect) {}
  ArcDefect defect() const { return defect_; }

 private:
  ArcDefect defect_;
};

enum class ParseErrorKind {
  kMissingHeader,
  kMalformedHeader,
  kMalformedLine,
  kSelfLoop,
  kDuplicateArc,
  kVertexOutOfRange,
  kArcCountMismatch,
};

// Parse failure; line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// A reduction source (CNF, set system, graph) violates the generator's input
// restrictions.
class ReductionError : public Error {
 public:
  using Error::Error;
};

}  // namespace dakc
