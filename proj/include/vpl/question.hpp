#pragma once

#include <optional>
#include <string_view>

#include "vpl/order.hpp"

namespace vpl {

/// Operators that walk the specificity order downwards. HOW refines the
/// verb, WHICH_PART and WHICH_KIND refine a noun slot along part_of and
/// kind_of edges.
enum class QuestionOperator { how, which_part, which_kind };

std::string_view to_string(QuestionOperator op);
/// Accepts how, which_part, which_kind and what_kind, in any case.
std::optional<QuestionOperator> question_from_string(std::string_view text);
Relation relation_of(QuestionOperator op);

} // namespace vpl
