#include "vpl/error.hpp"

namespace vpl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::unknown_atom: return "unknown_atom";
  case ErrorCode::kind_mismatch: return "kind_mismatch";
  case ErrorCode::label_mismatch: return "label_mismatch";
  case ErrorCode::arity_mismatch: return "arity_mismatch";
  case ErrorCode::contradiction: return "contradiction";
  case ErrorCode::vague_tense: return "vague_tense";
  case ErrorCode::unsupported_shape: return "unsupported_shape";
  case ErrorCode::subject_mismatch: return "subject_mismatch";
  case ErrorCode::tense_mismatch: return "tense_mismatch";
  case ErrorCode::not_entailed: return "not_entailed";
  case ErrorCode::cap_exceeded: return "cap_exceeded";
  case ErrorCode::unsupported_tense: return "unsupported_tense";
  case ErrorCode::interval_out_of_lifetime: return "interval_out_of_lifetime";
  case ErrorCode::invalid_interval: return "invalid_interval";
  case ErrorCode::non_canonical_form: return "non_canonical_form";
  case ErrorCode::not_factual: return "not_factual";
  case ErrorCode::slot_out_of_range: return "slot_out_of_range";
  case ErrorCode::no_degree: return "no_degree";
  case ErrorCode::no_iso: return "no_iso";
  case ErrorCode::out_of_range: return "out_of_range";
  case ErrorCode::parse_error: return "parse_error";
  case ErrorCode::resolution_error: return "resolution_error";
  case ErrorCode::no_refinement: return "no_refinement";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(message), code_(code) {}

} // namespace vpl
