#include "vpl/question.hpp"

#include "vpl/order.hpp"

namespace vpl {

std::string_view to_string(QuestionOperator op) {
  switch (op) {
  case QuestionOperator::how: return "HOW";
  case QuestionOperator::which_part: return "WHICH_PART";
  case QuestionOperator::which_kind: return "WHICH_KIND";
  }
  return "?";
}

std::optional<QuestionOperator> question_from_string(std::string_view text) {
  std::string word = normalize_identifier(text);
  if (word == "how") return QuestionOperator::how;
  if (word == "which_part") return QuestionOperator::which_part;
  if (word == "which_kind" || word == "what_kind") return QuestionOperator::which_kind;
  return std::nullopt;
}

Relation relation_of(QuestionOperator op) {
  switch (op) {
  case QuestionOperator::how: return Relation::way_of;
  case QuestionOperator::which_part: return Relation::part_of;
  case QuestionOperator::which_kind: return Relation::kind_of;
  }
  return Relation::kind_of;
}

} // namespace vpl
