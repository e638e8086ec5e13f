#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vpl/sentence.hpp"

namespace vpl {

enum class Connective { conj, disj };

/// A single-slot phrase with one coordinated position, e.g.
/// "I baked potatoes and apples" (two objects) or "I baked and ate potatoes"
/// (two verbs). Exactly one of `verbs` / `objects` has two entries.
struct CompoundPhrase {
  std::string subject;
  Tense tense = Tense::past_perfect;
  std::optional<TimeInterval> timeframe;
  Connective connective = Connective::conj;
  std::vector<std::string> verbs;
  std::vector<std::string> objects;

  friend bool operator==(const CompoundPhrase &, const CompoundPhrase &) = default;
};

/// A*(E and G) := A*E AND A*G, (A and C)*E := A*E AND C*E, and the same two
/// shapes with OR. Anything else throws unsupported_shape.
SentenceExpr distribute(const CompoundPhrase &phrase);

/// Inverse of distribute: recombines a binary AND/OR of two positive
/// single-slot sentences that differ in exactly the verb or the object.
CompoundPhrase factor(const SentenceExpr &expr);

} // namespace vpl
