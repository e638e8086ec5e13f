#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "vpl/error.hpp"
#include "vpl/question.hpp"
#include "vpl/world.hpp"

namespace vpl {

struct QuestionResult {
  /// Sorted; each answer differs from the question's sentence in the targeted
  /// component only and is strictly more specific there.
  std::vector<Sentence> answers;
  /// no_refinement when `answers` is empty.
  std::optional<ErrorCode> reason;
};

/// Answers `op` asked about `sentence`, which must be factual (or a plan) in
/// the world. Noun operators need `slot` (0-based) unless the phrase has a
/// single noun; HOW ignores it. Throws not_factual and slot_out_of_range.
QuestionResult apply_question(const Taxonomy &taxonomy, const World &world, QuestionOperator op,
                              const Sentence &sentence,
                              std::optional<std::size_t> slot = std::nullopt);

/// Lexicographically first among the most specific answers.
std::optional<Sentence> best_answer(const Taxonomy &taxonomy, const QuestionResult &result);

enum class Speaker { system, user };
std::string_view to_string(Speaker speaker);

struct Question {
  QuestionOperator op;
  std::optional<std::size_t> slot;

  friend bool operator==(const Question &, const Question &) = default;
};

struct DialogueTurn {
  Speaker speaker;
  std::string text;
  std::variant<Sentence, Question> payload;
};

/// "WHICH_PART[1] * (i future own*property*us)", "HOW * (...)"
std::string question_text(const Question &question, const Sentence &about);

/// Scripted conversation from the most general statement entailed by the
/// most specific known fact below `root` down to that fact, one edge per
/// question. Descents are taken WHICH_PART first, then HOW, then WHICH_KIND,
/// lower slots first. Throws not_factual.
std::vector<DialogueTurn> generate_dialogue(const Taxonomy &taxonomy, const World &world,
                                            const Sentence &root);

struct ReplState {
  World world;
  /// Sentence that a question without an explicit sentence refers to.
  std::optional<Sentence> focus;
};

struct ReplResponse {
  /// Starts with "A: " or "ERR: ".
  std::string text;
  /// Set for errors and for questions without a refinement.
  std::optional<ErrorCode> code;
};

/// Runs one line of the dialogue protocol. On any error the returned state
/// equals the input state.
std::pair<ReplState, ReplResponse> repl_step(const Taxonomy &taxonomy, ReplState state,
                                             std::string_view line);

} // namespace vpl
