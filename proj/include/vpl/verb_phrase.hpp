#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vpl/order.hpp"

namespace vpl {

/// Designated upper bounds, registered in every taxonomy. "X has done
/// something" is the top phrase and its negation the bottom.
inline constexpr std::string_view kTopVerb = "do";
inline constexpr std::string_view kTopNoun = "something";

/// A verb applied to one or more positional noun slots. A single polarity
/// flag covers the whole phrase: negating the phrase negates every
/// component at once, so mixed component polarities cannot be represented.
struct VerbPhrase {
  std::string verb;
  std::vector<std::string> nouns;
  bool negated = false;

  std::size_t arity() const { return nouns.size(); }
  VerbPhrase negate() const;
  VerbPhrase core() const;

  friend auto operator<=>(const VerbPhrase &, const VerbPhrase &) = default;
  friend bool operator==(const VerbPhrase &, const VerbPhrase &) = default;
};

/// "not fly*tokyo*la"
std::string to_string(const VerbPhrase &vp);

/// The noun and verb preorders of a knowledge base plus per-verb slot counts.
class Taxonomy {
public:
  Taxonomy();

  const Preorder &nouns() const { return nouns_; }
  const Preorder &verbs() const { return verbs_; }

  /// Registers an atom under `kind`. An identifier belongs to one kind only.
  void register_atom(std::string_view id, Kind kind);
  std::optional<Kind> kind_of_atom(std::string_view id) const;

  /// Registers both atoms under the label's kind (if new) and records the edge.
  void declare(std::string_view lower, std::string_view upper, Relation label);

  /// Checks that every atom exists with the right kind and that the arity
  /// agrees with earlier uses of the verb; binds the arity on first use.
  void bind(const VerbPhrase &vp);
  /// Same checks as bind without recording anything.
  void validate(const VerbPhrase &vp) const;
  std::optional<std::size_t> arity_of(std::string_view verb) const;

  bool is_bound_atom(std::string_view id) const;

  VerbPhrase top(std::size_t arity) const;
  VerbPhrase bottom(std::size_t arity) const;

private:
  Preorder nouns_{Kind::noun};
  Preorder verbs_{Kind::verb};
  std::map<std::string, std::size_t, std::less<>> arity_;
};

VerbPhrase vp_negate(const VerbPhrase &vp);

/// Product order: componentwise for positive phrases, reversed for negated
/// ones, false across polarities. Throws arity_mismatch for differing slot
/// counts and unknown_atom for unregistered atoms.
bool vp_leq(const Taxonomy &taxonomy, const VerbPhrase &a, const VerbPhrase &b);

/// Witness chain of single-edge steps from a to b: the verb moves first, then
/// each noun slot in order. nullopt when !vp_leq(a, b).
std::optional<std::vector<VerbPhrase>> vp_chain(const Taxonomy &taxonomy, const VerbPhrase &a,
                                                const VerbPhrase &b);

} // namespace vpl
