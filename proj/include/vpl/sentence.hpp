#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vpl/verb_phrase.hpp"

namespace vpl {

enum class Tense { past, past_perfect, present_continuous, future };

std::string_view to_string(Tense tense);
std::optional<Tense> tense_from_string(std::string_view text);

/// Closed interval of discrete time points.
struct TimeInterval {
  std::int64_t start = 0;
  std::int64_t end = 0;

  bool contains(std::int64_t t) const { return start <= t && t <= end; }
  bool contains(const TimeInterval &other) const {
    return start <= other.start && other.end <= end;
  }

  friend auto operator<=>(const TimeInterval &, const TimeInterval &) = default;
  friend bool operator==(const TimeInterval &, const TimeInterval &) = default;
};

/// Throws invalid_interval when start > end.
TimeInterval make_interval(std::int64_t start, std::int64_t end);
std::string to_string(const TimeInterval &interval);

/// Subject + tense + verb phrase. Plain past needs a timeframe to be usable
/// with the excluded-middle laws.
struct Sentence {
  std::string subject;
  Tense tense = Tense::past_perfect;
  VerbPhrase vp;
  std::optional<TimeInterval> timeframe;

  /// Negates the verb phrase; subject, tense and timeframe stay.
  Sentence negate() const;
  Sentence with_vp(VerbPhrase other) const;
  bool vague() const { return tense == Tense::past && !timeframe; }
  /// Same subject, tense and timeframe.
  bool same_frame(const Sentence &other) const;

  friend auto operator<=>(const Sentence &, const Sentence &) = default;
  friend bool operator==(const Sentence &, const Sentence &) = default;
};

/// "i past_perfect not own*car", "i past buy*laptop @[96,98]"
std::string to_string(const Sentence &sentence);

enum class Status { factual, not_factual, unknown, plan };
std::string_view to_string(Status status);

/// Boolean combination of sentences. Negating an atom folds into the verb
/// phrase polarity and double negations cancel, so NOT never wraps an atom
/// or another NOT.
class SentenceExpr {
public:
  enum class Op { atom, conj, disj, neg };

  static SentenceExpr atom(Sentence sentence);
  static SentenceExpr conj(SentenceExpr lhs, SentenceExpr rhs);
  static SentenceExpr disj(SentenceExpr lhs, SentenceExpr rhs);
  static SentenceExpr negation(SentenceExpr inner);

  Op op() const { return op_; }
  /// Only valid for atoms.
  const Sentence &sentence() const { return *sentence_; }
  const std::vector<SentenceExpr> &operands() const { return operands_; }

  friend bool operator==(const SentenceExpr &, const SentenceExpr &) = default;

private:
  SentenceExpr() = default;

  Op op_ = Op::atom;
  std::optional<Sentence> sentence_;
  std::vector<SentenceExpr> operands_;
};

/// Renders negated atoms as NOT(...) and the rest in parentheses, e.g.
/// "NOT(i past_perfect bake*potato) OR (i past_perfect cook*vegetable)".
/// parse_expr accepts this form back.
std::string to_string(const SentenceExpr &expr);

} // namespace vpl
