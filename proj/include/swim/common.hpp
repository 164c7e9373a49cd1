#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swim {

/// Dense id assigned to a user name on first sight.
using UserId = std::uint32_t;

/// Sequence number carried by an input record.
using Seq = std::int64_t;

/// Arrival ordinal of an accepted action, starting at 1. Windows and
/// checkpoints are expressed in positions so that gaps in input sequence
/// numbers (or filtered-out records) never change what N means.
using Position = std::uint64_t;

inline constexpr Position kNoPosition = 0;

/// Exception categories; the CLI maps each to its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Stream contract violations: duplicate or out-of-order sequence numbers.
class StreamError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal invariant fails; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Seed set reported by an engine or solver.
struct SeedResult {
  std::vector<UserId> seeds;  // ascending user id
  double value = 0.0;
  std::string provenance;
};

}  // namespace swim
