#include "qsym/error.hpp"

namespace qsym {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_params: return "invalid-params";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::range_error: return "range-error";
    case ErrorKind::duplicate_edge: return "duplicate-edge";
    case ErrorKind::self_loop: return "self-loop";
    case ErrorKind::unknown_edge: return "unknown-edge";
    case ErrorKind::empty_graph: return "empty-graph";
    case ErrorKind::search_budget_exceeded: return "search-budget-exceeded";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::not_a_bijection: return "not-a-bijection";
    case ErrorKind::not_invariant: return "not-invariant";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::singular_system: return "singular-system";
    case ErrorKind::degenerate_labels: return "degenerate-labels";
    case ErrorKind::too_few_cutoffs: return "too-few-cutoffs";
    case ErrorKind::constant_input: return "constant-input";
    case ErrorKind::insufficient_data: return "insufficient-data";
    case ErrorKind::io_error: return "io-error";
    case ErrorKind::verification_failed: return "verification-failed";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

ErrorCategory category_of(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::size_limit:
      return ErrorCategory::size_limit;
    case ErrorKind::verification_failed:
      return ErrorCategory::verification;
    case ErrorKind::io_error:
      return ErrorCategory::io;
    case ErrorKind::search_budget_exceeded:
      return ErrorCategory::budget;
    case ErrorKind::singular_system:
      return ErrorCategory::numeric;
    case ErrorKind::internal:
      return ErrorCategory::internal;
    default:
      return ErrorCategory::invalid_input;
  }
}

}  // namespace qsym
