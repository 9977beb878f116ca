#pragma once

#include <stdexcept>
#include <string>

namespace driftstream {

/// Input file rejected. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownColumnError : public std::invalid_argument {
 public:
  explicit UnknownColumnError(const std::string& column)
      : std::invalid_argument("unknown class column: " + column) {}
};

class TooFewPairsError : public std::invalid_argument {
 public:
  explicit TooFewPairsError(std::size_t n)
      : std::invalid_argument("need at least 5 non-zero differences, got " + std::to_string(n)) {}
};

class EmptyInputError : public std::invalid_argument {
 public:
  explicit EmptyInputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace driftstream
