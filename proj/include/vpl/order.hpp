#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vpl/error.hpp"

namespace vpl {

enum class Kind { noun, verb };

/// Specificity relations. kind_of and part_of connect nouns, way_of connects
/// verbs. All of them read "lower <= upper".
enum class Relation { kind_of, part_of, way_of };

std::string_view to_string(Kind kind);
std::string_view to_string(Relation relation);
std::optional<Relation> relation_from_string(std::string_view text);
Kind kind_of(Relation relation);

/// Trims, case-folds and turns internal whitespace runs into '_'.
std::string normalize_identifier(std::string_view raw);

/// A signed atom. Negation is eager, so a stored literal never carries a
/// double negation.
struct Literal {
  std::string id;
  bool negated = false;

  Literal negate() const { return Literal{id, !negated}; }

  friend auto operator<=>(const Literal &, const Literal &) = default;
  friend bool operator==(const Literal &, const Literal &) = default;
};

inline Literal positive(std::string id) { return Literal{std::move(id), false}; }
inline Literal negative(std::string id) { return Literal{std::move(id), true}; }

std::string to_string(const Literal &literal);

struct Edge {
  std::string lower;
  std::string upper;
  Relation label;

  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Labeled preorder over the atoms of one kind.
///
/// Only positive atoms and positive edges are stored. Queries on negated
/// literals are answered by reversing the order, which makes the
/// contrapositive law hold structurally. Cycles are allowed and mean the
/// atoms are equally specific. The reflexive-transitive closure is maintained
/// incrementally, so every query is const and safe to run concurrently once
/// construction is finished.
class Preorder {
public:
  explicit Preorder(Kind kind) : kind_(kind) {}

  Kind kind() const { return kind_; }

  /// Registers an atom; a no-op when it is already present.
  void add_atom(std::string_view id);
  bool contains(std::string_view id) const;
  /// Atoms in registration order.
  const std::vector<std::string> &atoms() const { return names_; }
  const std::vector<Edge> &edges() const { return edges_; }

  /// Makes `id` an upper bound of every atom, present and future.
  void set_top(std::string_view id);
  std::optional<std::string> top() const;
  bool is_top(std::string_view id) const;

  /// Records lower <= upper. Throws unknown_atom for unregistered atoms and
  /// kind_mismatch when the label belongs to the other kind.
  void declare_relation(std::string_view lower, std::string_view upper, Relation label);

  bool leq(std::string_view lower, std::string_view upper) const;
  /// Mixed polarities compare false.
  bool leq(const Literal &a, const Literal &b) const;

  /// Every b with leq(a, b), a included, sorted.
  std::vector<Literal> generalizations(const Literal &a) const;
  /// Every b with leq(b, a), a included, sorted. With a label, only atoms
  /// reachable through edges carrying that label are returned.
  std::vector<Literal> specializations(const Literal &a,
                                       std::optional<Relation> label = std::nullopt) const;

  /// Direct upper neighbours of an atom (declared edges plus the implicit
  /// edge to the top), sorted.
  std::vector<std::string> direct_uppers(std::string_view id) const;
  std::vector<std::string> direct_lowers(std::string_view id) const;

  /// Shortest chain of single edge steps from lower up to upper, both ends
  /// included. Empty when !leq(lower, upper).
  std::vector<std::string> upward_path(std::string_view lower, std::string_view upper) const;
  /// Number of edge steps on upward_path, or nullopt when unrelated.
  std::optional<std::size_t> distance(std::string_view lower, std::string_view upper) const;

  /// Label of a declared edge lower -> upper, if any.
  std::optional<Relation> edge_label(std::string_view lower, std::string_view upper) const;

private:
  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;
  std::vector<std::size_t> uppers_of(std::size_t i) const;
  std::vector<std::size_t> shortest_path(std::size_t from, std::size_t to) const;

  Kind kind_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<Edge> edges_;
  struct Arc {
    std::size_t to;
    Relation label;
  };
  std::vector<std::vector<Arc>> up_;
  std::vector<std::vector<Arc>> down_;
  // reach_[a][b] holds a <= b.
  std::vector<std::vector<char>> reach_;
  std::optional<std::size_t> top_;
};

} // namespace vpl
