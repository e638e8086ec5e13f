#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vpl/sentence.hpp"

namespace vpl {

inline constexpr std::size_t kDefaultCap = 10000;

enum class Rule { verb_general, noun_general, contraposition, reflexive };
std::string_view to_string(Rule rule);

/// One substitution of a single component. `slot` is empty for the verb.
struct DerivationStep {
  Rule rule;
  std::optional<std::size_t> slot;
  std::string from;
  std::string to;
  Sentence result;
};

struct Derivation {
  Sentence source;
  Sentence conclusion;
  std::vector<DerivationStep> steps;
};

/// Re-applies every step to `source`, checking each against the taxonomy, and
/// returns the final sentence. Throws not_entailed on an unjustified step.
Sentence replay(const Taxonomy &taxonomy, const Derivation &derivation);

/// Same subject and frame required; true iff vp_leq(from.vp, to.vp).
bool entails(const Taxonomy &taxonomy, const Sentence &from, const Sentence &to);

/// Witness for entails(from, to); throws not_entailed otherwise.
Derivation derive(const Taxonomy &taxonomy, const Sentence &from, const Sentence &to);

struct ClosureResult {
  std::vector<Derivation> derivations;
  /// Set when more than `cap` conclusions exist; the first `cap` are kept.
  bool truncated = false;
};

/// Every distinct sentence strictly entailed by `fact`, ordered by
/// (derivation length, verb, nouns). Phrases that introduce the designated
/// bound atoms ("do", "something") are left out.
ClosureResult closure(const Taxonomy &taxonomy, const Sentence &fact, std::size_t cap = kDefaultCap);

struct Implication {
  Sentence from;
  Sentence to;

  friend bool operator==(const Implication &, const Implication &) = default;
};

/// (from => to) becomes (NOT to => NOT from). Throws not_entailed.
Implication contrapose(const Taxonomy &taxonomy, const Implication &implication);

/// (from => to) becomes NOT from OR to. Throws not_entailed.
SentenceExpr implication_to_disjunction(const Taxonomy &taxonomy, const Implication &implication);

/// "if <antecedent> then <consequent>". Free-text antecedents are opaque.
struct ConditionalRule {
  std::variant<std::string, Sentence> antecedent;
  Sentence consequent;

  friend bool operator==(const ConditionalRule &, const ConditionalRule &) = default;
};

std::string to_string(const ConditionalRule &rule);

struct PropagationResult {
  std::vector<ConditionalRule> rules;
  bool truncated = false;
};

/// One rule per closure element of the consequent, antecedent unchanged.
PropagationResult propagate_conditional(const Taxonomy &taxonomy, const ConditionalRule &rule,
                                        std::size_t cap = kDefaultCap);

} // namespace vpl
