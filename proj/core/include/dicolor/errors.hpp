#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dicolor {

/// Malformed edge-list input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An input exceeds a configured size limit of an exponential routine.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, long long requested, long long limit)
      : std::runtime_error(what + " (requested " + std::to_string(requested) + ", limit " +
                           std::to_string(limit) + ")"),
        requested_(requested),
        limit_(limit) {}
  long long requested() const noexcept { return requested_; }
  long long limit() const noexcept { return limit_; }

 private:
  long long requested_;
  long long limit_;
};

/// Argument outside the domain of an operation (n = 0, t > n, p > 1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller-asserted structural precondition turned out false. Carries a
/// witness cycle (vertex sequence) when one is available.
class PreconditionViolation : public std::runtime_error {
 public:
  PreconditionViolation(const std::string& what, std::vector<int> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace dicolor
