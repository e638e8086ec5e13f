#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vpl/sentence.hpp"

namespace vpl {

struct Fact {
  Sentence sentence;
  /// factual, not_factual, or plan for future-tense sentences.
  Status status;
};

/// The fact store. Every recorded fact is reduced to a known literal
/// (not_factual S is stored as knowing NOT S), and an assertion is refused when
/// an existing literal in the same frame already entails its negation.
///
/// Single writer, many readers: assert_fact must not race with evaluation.
class World {
public:
  /// Records `sentence` with the given status (factual or not_factual).
  /// Future-tense sentences are recorded as plans. Throws vague_tense for a
  /// plain past without a timeframe and contradiction when the world already
  /// forces the opposite status.
  void assert_fact(const Taxonomy &taxonomy, const Sentence &sentence,
                   Status status = Status::factual);

  const std::vector<Fact> &facts() const { return facts_; }
  /// One literal per fact, polarity folded in.
  const std::vector<Sentence> &known() const { return known_; }
  std::vector<std::string> subjects() const;
  bool empty() const { return facts_.empty(); }

  /// factual when a known literal in the same frame entails the sentence,
  /// not_factual when one entails its negation, plan instead of factual for
  /// future tense, unknown otherwise (and always for vague past).
  Status eval_atom(const Taxonomy &taxonomy, const Sentence &sentence) const;

  /// The known literal that settles `sentence` either way, if any.
  std::optional<Sentence> witness(const Taxonomy &taxonomy, const Sentence &sentence) const;

private:
  std::vector<Fact> facts_;
  std::vector<Sentence> known_;
};

/// Strong Kleene evaluation ordered not_factual < unknown < plan < factual;
/// on {factual, not_factual} this is the two-valued Boolean table.
Status eval(const World &world, const Taxonomy &taxonomy, const SentenceExpr &expr);

/// Material conditional from => to, computed from the atom statuses with the
/// usual case table (false only when the antecedent holds and the consequent
/// fails). Both sentences must share a frame.
Status eval_implication(const World &world, const Taxonomy &taxonomy, const Sentence &from,
                        const Sentence &to);

/// Tense and timeframe of a group of sentences for one subject.
struct Frame {
  Tense tense = Tense::past_perfect;
  std::optional<TimeInterval> timeframe;

  friend auto operator<=>(const Frame &, const Frame &) = default;
  friend bool operator==(const Frame &, const Frame &) = default;
};

/// Excluded middle and non-contradiction are audited only for past_perfect,
/// present_continuous and past with a timeframe.
bool law_gated(const Frame &frame);

enum class LawVerdict { holds, violation, indeterminate };
std::string_view to_string(LawVerdict verdict);

struct LawEntry {
  Sentence sentence;
  Status status;
  Status negated_status;
  LawVerdict verdict;
};

struct LawReport {
  std::vector<LawEntry> entries;
  std::size_t determinate = 0;
  std::size_t indeterminate = 0;
  std::size_t violations = 0;

  bool ok() const { return violations == 0; }
};

/// For every subject, gated frame and positive phrase, checks that exactly
/// one of S and NOT S is factual whenever either is known.
LawReport check_laws(const World &world, const Taxonomy &taxonomy,
                     const std::vector<std::string> &subjects, const std::vector<VerbPhrase> &vps,
                     const std::vector<Frame> &frames);

/// check_laws over the subjects and frames present in the world and every
/// phrase comparable with a known literal, at most `cap` phrases per frame.
LawReport audit_world(const World &world, const Taxonomy &taxonomy, std::size_t cap = 10000);

} // namespace vpl
