#pragma once

#include <stdexcept>
#include <string>

namespace gazekit {

enum class errc {
  malformed_document,
  missing_field,
  non_monotonic_timestamps,
  header_mismatch,
  row_arity,
  unparseable_number,
  unlabeled_data,
  empty_input,
  too_few_samples,
  zero_variance,
  invalid_sample,
  empty_after_filtering,
  all_removed,
  too_few_rows,
  zero_variance_column,
  dimension_mismatch,
  k_out_of_range,
  single_class,
  length_mismatch,
  k_too_large,
  degenerate_fold,
  wrong_dimensionality,
  out_of_range,
  invalid_config,
  io_error,
  shape_mismatch,
  empty_matrix,
};

const char* errc_name(errc code);

/// All recoverable failures surface as Error; code() identifies the class
/// so callers can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gazekit
