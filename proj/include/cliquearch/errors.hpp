#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquearch {

/// Invalid graph construction or out-of-range vertex.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. `line()` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Bad command-line or API usage (unknown algorithm id, too few algorithms).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard refused the input (oracle subset scan, generator limits, motif lengths).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bundled dataset missing or failing its integrity check.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Algorithms under benchmark produced different clique counts.
class DisagreementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cliquearch
