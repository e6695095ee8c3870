#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace troprank {

// Caller misuse: mismatched tags/backends, non-conforming shapes, bad flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined operation: inverse of zero, non-regular input,
// star of a matrix whose Tr exceeds one, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The constraint matrix admits a cycle with product above one, so the
// constraint cone has no regular interior. `cycle` lists 0-based indices
// i1 -> i2 -> ... -> ik -> i1 of one such cycle.
class InfeasibleError : public DomainError {
 public:
  InfeasibleError(const std::string& what, std::vector<std::size_t> cycle,
                  std::string cycle_value)
      : DomainError(what),
        cycle_(std::move(cycle)),
        cycle_value_(std::move(cycle_value)) {}

  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }
  const std::string& cycle_value() const noexcept { return cycle_value_; }

 private:
  std::vector<std::size_t> cycle_;
  std::string cycle_value_;
};

// Input text that could not be parsed. Carries an optional line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace troprank
