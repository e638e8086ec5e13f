#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vpl {

enum class ErrorCode {
  unknown_atom,
  kind_mismatch,
  label_mismatch,
  arity_mismatch,
  contradiction,
  vague_tense,
  unsupported_shape,
  subject_mismatch,
  tense_mismatch,
  not_entailed,
  cap_exceeded,
  unsupported_tense,
  interval_out_of_lifetime,
  invalid_interval,
  non_canonical_form,
  not_factual,
  slot_out_of_range,
  no_degree,
  no_iso,
  out_of_range,
  parse_error,
  resolution_error,
  no_refinement,
};

/// Stable snake_case name, used in machine-readable output.
std::string_view to_string(ErrorCode code);

/// Base exception for every failure the engine reports.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace vpl
