#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace seqfam {

/// Invalid input parameters (non-prime modulus, violated construction hypothesis, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation undefined at this argument (inverse of zero, character of zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive computation would exceed its configured work budget.
///
/// `lower_bound` is set when the computation certified a partial result before
/// refusing (f-complexity reports the largest j it could verify).
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t estimate, std::uint64_t budget,
              std::optional<std::int64_t> lower_bound = std::nullopt)
      : std::runtime_error(what + " (estimated " + std::to_string(estimate) + " > budget " +
                           std::to_string(budget) + ")"),
        estimate_(estimate),
        budget_(budget),
        lower_bound_(lower_bound) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }
  std::optional<std::int64_t> lower_bound() const noexcept { return lower_bound_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
  std::optional<std::int64_t> lower_bound_;
};

/// Malformed family file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A construction produced two identical rows where the theory promises distinct ones.
class DuplicateRowsError : public std::runtime_error {
 public:
  DuplicateRowsError(std::size_t first, std::size_t second)
      : std::runtime_error("rows " + std::to_string(first) + " and " + std::to_string(second) +
                           " are identical sequences"),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Broken internal invariant (e.g. a trace leaving the prime field). Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace seqfam
