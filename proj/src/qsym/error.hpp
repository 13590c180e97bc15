#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

/// Failure categories. The numeric value of each category doubles as the
/// CLI exit code where one is defined (2 invalid input, 3 size limit,
/// 4 verification failure).
enum class ErrorCategory {
  internal = 1,
  invalid_input = 2,
  size_limit = 3,
  verification = 4,
  io = 5,
  budget = 6,
  numeric = 7,
};

enum class ErrorKind {
  invalid_params,
  parse_error,
  range_error,
  duplicate_edge,
  self_loop,
  unknown_edge,
  empty_graph,
  search_budget_exceeded,
  size_limit,
  not_a_bijection,
  not_invariant,
  dimension_mismatch,
  empty_input,
  singular_system,
  degenerate_labels,
  too_few_cutoffs,
  constant_input,
  insufficient_data,
  io_error,
  verification_failed,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;
ErrorCategory category_of(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace qsym
