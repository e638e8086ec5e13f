#include "vpl/verb_phrase.hpp"

#include <algorithm>

#include "vpl/error.hpp"

namespace vpl {

VerbPhrase VerbPhrase::negate() const {
  VerbPhrase out = *this;
  out.negated = !negated;
  return out;
}

VerbPhrase VerbPhrase::core() const {
  VerbPhrase out = *this;
  out.negated = false;
  return out;
}

std::string to_string(const VerbPhrase &vp) {
  std::string out = vp.negated ? "not " : "";
  out += vp.verb;
  for (const auto &noun : vp.nouns) out += "*" + noun;
  return out;
}

Taxonomy::Taxonomy() {
  verbs_.set_top(kTopVerb);
  nouns_.set_top(kTopNoun);
}

std::optional<Kind> Taxonomy::kind_of_atom(std::string_view id) const {
  if (nouns_.contains(id)) return Kind::noun;
  if (verbs_.contains(id)) return Kind::verb;
  return std::nullopt;
}

void Taxonomy::register_atom(std::string_view id, Kind kind) {
  auto existing = kind_of_atom(id);
  if (existing && *existing != kind) {
    throw Error(ErrorCode::kind_mismatch, "'" + std::string(id) + "' is already a " +
                                              std::string(to_string(*existing)));
  }
  (kind == Kind::noun ? nouns_ : verbs_).add_atom(id);
}

void Taxonomy::declare(std::string_view lower, std::string_view upper, Relation label) {
  Kind kind = kind_of(label);
  register_atom(lower, kind);
  register_atom(upper, kind);
  (kind == Kind::noun ? nouns_ : verbs_).declare_relation(lower, upper, label);
}

void Taxonomy::validate(const VerbPhrase &vp) const {
  if (vp.nouns.empty()) {
    throw Error(ErrorCode::arity_mismatch, "verb phrase '" + vp.verb + "' has no noun slot");
  }
  auto check = [this](const std::string &id, Kind expected) {
    auto kind = kind_of_atom(id);
    if (!kind) {
      throw Error(ErrorCode::unknown_atom,
                  "unknown " + std::string(to_string(expected)) + " '" + id + "'");
    }
    if (*kind != expected) {
      throw Error(ErrorCode::kind_mismatch,
                  "'" + id + "' is a " + std::string(to_string(*kind)) + ", expected a " +
                      std::string(to_string(expected)));
    }
  };
  check(vp.verb, Kind::verb);
  for (const auto &noun : vp.nouns) check(noun, Kind::noun);
  if (vp.verb == kTopVerb) return;
  auto bound = arity_of(vp.verb);
  if (bound && *bound != vp.arity()) {
    throw Error(ErrorCode::arity_mismatch, "verb '" + vp.verb + "' takes " +
                                               std::to_string(*bound) + " noun slot(s), got " +
                                               std::to_string(vp.arity()));
  }
}

void Taxonomy::bind(const VerbPhrase &vp) {
  validate(vp);
  if (vp.verb != kTopVerb) arity_.emplace(vp.verb, vp.arity());
}

std::optional<std::size_t> Taxonomy::arity_of(std::string_view verb) const {
  auto it = arity_.find(verb);
  if (it == arity_.end()) return std::nullopt;
  return it->second;
}

bool Taxonomy::is_bound_atom(std::string_view id) const {
  return id == kTopVerb || id == kTopNoun;
}

VerbPhrase Taxonomy::top(std::size_t arity) const {
  return VerbPhrase{std::string(kTopVerb), std::vector<std::string>(arity, std::string(kTopNoun)),
                    false};
}

VerbPhrase Taxonomy::bottom(std::size_t arity) const { return top(arity).negate(); }

VerbPhrase vp_negate(const VerbPhrase &vp) { return vp.negate(); }

namespace {

void require_same_arity(const VerbPhrase &a, const VerbPhrase &b) {
  if (a.arity() != b.arity()) {
    throw Error(ErrorCode::arity_mismatch, "cannot compare '" + to_string(a) + "' with '" +
                                               to_string(b) + "': slot counts differ");
  }
}

bool core_leq(const Taxonomy &taxonomy, const VerbPhrase &lower, const VerbPhrase &upper) {
  if (!taxonomy.verbs().leq(lower.verb, upper.verb)) return false;
  for (std::size_t i = 0; i < lower.nouns.size(); ++i) {
    if (!taxonomy.nouns().leq(lower.nouns[i], upper.nouns[i])) return false;
  }
  return true;
}

// Single steps walking every component of `from` up to `to`.
std::vector<VerbPhrase> upward_chain(const Taxonomy &taxonomy, const VerbPhrase &from,
                                     const VerbPhrase &to) {
  std::vector<VerbPhrase> chain{from};
  VerbPhrase cur = from;
  auto verbs = taxonomy.verbs().upward_path(from.verb, to.verb);
  for (std::size_t i = 1; i < verbs.size(); ++i) {
    cur.verb = verbs[i];
    chain.push_back(cur);
  }
  for (std::size_t slot = 0; slot < from.nouns.size(); ++slot) {
    auto nouns = taxonomy.nouns().upward_path(from.nouns[slot], to.nouns[slot]);
    for (std::size_t i = 1; i < nouns.size(); ++i) {
      cur.nouns[slot] = nouns[i];
      chain.push_back(cur);
    }
  }
  return chain;
}

// Same as upward_chain but walking down from `from` to `to` (to <= from).
std::vector<VerbPhrase> downward_chain(const Taxonomy &taxonomy, const VerbPhrase &from,
                                       const VerbPhrase &to) {
  std::vector<VerbPhrase> chain{from};
  VerbPhrase cur = from;
  auto verbs = taxonomy.verbs().upward_path(to.verb, from.verb);
  for (auto it = std::next(verbs.rbegin(), verbs.empty() ? 0 : 1); it != verbs.rend(); ++it) {
    cur.verb = *it;
    chain.push_back(cur);
  }
  for (std::size_t slot = 0; slot < from.nouns.size(); ++slot) {
    auto nouns = taxonomy.nouns().upward_path(to.nouns[slot], from.nouns[slot]);
    for (auto it = std::next(nouns.rbegin(), nouns.empty() ? 0 : 1); it != nouns.rend(); ++it) {
      cur.nouns[slot] = *it;
      chain.push_back(cur);
    }
  }
  return chain;
}

} // namespace

bool vp_leq(const Taxonomy &taxonomy, const VerbPhrase &a, const VerbPhrase &b) {
  require_same_arity(a, b);
  taxonomy.validate(a);
  taxonomy.validate(b);
  if (a.negated != b.negated) return false;
  return a.negated ? core_leq(taxonomy, b, a) : core_leq(taxonomy, a, b);
}

std::optional<std::vector<VerbPhrase>> vp_chain(const Taxonomy &taxonomy, const VerbPhrase &a,
                                                const VerbPhrase &b) {
  if (!vp_leq(taxonomy, a, b)) return std::nullopt;
  if (!a.negated) return upward_chain(taxonomy, a, b);
  return downward_chain(taxonomy, a, b);
}

} // namespace vpl
