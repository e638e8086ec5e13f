#include "vpl/inference.hpp"

#include <algorithm>
#include <tuple>

#include "vpl/error.hpp"

namespace vpl {

std::string_view to_string(Rule rule) {
  switch (rule) {
  case Rule::verb_general: return "verb_general";
  case Rule::noun_general: return "noun_general";
  case Rule::contraposition: return "contraposition";
  case Rule::reflexive: return "reflexive";
  }
  return "?";
}

namespace {

void require_same_frame(const Sentence &from, const Sentence &to) {
  if (from.subject != to.subject) {
    throw Error(ErrorCode::subject_mismatch,
                "subjects differ: '" + from.subject + "' and '" + to.subject + "'");
  }
  if (from.tense != to.tense || from.timeframe != to.timeframe) {
    throw Error(ErrorCode::tense_mismatch, "'" + to_string(from) + "' and '" + to_string(to) +
                                               "' are in different tenses or timeframes");
  }
}

[[noreturn]] void not_entailed(const Sentence &from, const Sentence &to) {
  throw Error(ErrorCode::not_entailed,
              "'" + to_string(from) + "' does not entail '" + to_string(to) + "'");
}

std::vector<DerivationStep> steps_from_chain(const Sentence &source,
                                             const std::vector<VerbPhrase> &chain) {
  std::vector<DerivationStep> steps;
  bool negated = source.vp.negated;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const VerbPhrase &prev = chain[i - 1];
    const VerbPhrase &next = chain[i];
    DerivationStep step{Rule::verb_general, std::nullopt, prev.verb, next.verb,
                        source.with_vp(next)};
    if (prev.verb == next.verb) {
      step.rule = Rule::noun_general;
      for (std::size_t s = 0; s < prev.nouns.size(); ++s) {
        if (prev.nouns[s] != next.nouns[s]) {
          step.slot = s;
          step.from = prev.nouns[s];
          step.to = next.nouns[s];
          break;
        }
      }
    }
    if (negated) step.rule = Rule::contraposition;
    steps.push_back(std::move(step));
  }
  return steps;
}

} // namespace

bool entails(const Taxonomy &taxonomy, const Sentence &from, const Sentence &to) {
  require_same_frame(from, to);
  return vp_leq(taxonomy, from.vp, to.vp);
}

Derivation derive(const Taxonomy &taxonomy, const Sentence &from, const Sentence &to) {
  require_same_frame(from, to);
  auto chain = vp_chain(taxonomy, from.vp, to.vp);
  if (!chain) not_entailed(from, to);
  Derivation d{from, to, steps_from_chain(from, *chain)};
  if (d.steps.empty()) {
    d.steps.push_back(DerivationStep{Rule::reflexive, std::nullopt, from.vp.verb, from.vp.verb, to});
  }
  return d;
}

Sentence replay(const Taxonomy &taxonomy, const Derivation &derivation) {
  Sentence cur = derivation.source;
  for (const DerivationStep &step : derivation.steps) {
    if (step.rule == Rule::reflexive) {
      if (step.result != cur) not_entailed(cur, step.result);
      continue;
    }
    VerbPhrase next = cur.vp;
    std::string &component = step.slot ? next.nouns.at(*step.slot) : next.verb;
    if (component != step.from) not_entailed(cur, step.result);
    component = step.to;
    const Preorder &order = step.slot ? taxonomy.nouns() : taxonomy.verbs();
    bool justified = false;
    switch (step.rule) {
    case Rule::verb_general:
      justified = !step.slot && !cur.vp.negated && order.leq(step.from, step.to);
      break;
    case Rule::noun_general:
      justified = step.slot && !cur.vp.negated && order.leq(step.from, step.to);
      break;
    case Rule::contraposition:
      justified = cur.vp.negated && order.leq(step.to, step.from);
      break;
    case Rule::reflexive: break;
    }
    Sentence after = cur.with_vp(next);
    if (!justified || after != step.result) not_entailed(cur, step.result);
    cur = std::move(after);
  }
  return cur;
}

ClosureResult closure(const Taxonomy &taxonomy, const Sentence &fact, std::size_t cap) {
  taxonomy.validate(fact.vp);
  const VerbPhrase &vp = fact.vp;
  bool down = vp.negated;

  // Candidate values per component with their step distance from the fact.
  using Axis = std::vector<std::pair<std::string, std::size_t>>;
  auto axis = [&](const Preorder &order, const std::string &id) {
    Axis out;
    auto lits = down ? order.specializations(positive(id)) : order.generalizations(positive(id));
    for (const Literal &l : lits) {
      if (l.id != id && taxonomy.is_bound_atom(l.id)) continue;
      auto dist = down ? order.distance(l.id, id) : order.distance(id, l.id);
      out.emplace_back(l.id, *dist);
    }
    return out;
  };
  std::vector<Axis> axes{axis(taxonomy.verbs(), vp.verb)};
  for (const auto &noun : vp.nouns) axes.push_back(axis(taxonomy.nouns(), noun));

  struct Candidate {
    std::size_t steps;
    VerbPhrase vp;
  };
  std::vector<Candidate> found;
  std::vector<std::size_t> idx(axes.size(), 0);
  for (;;) {
    Candidate c{0, VerbPhrase{axes[0][idx[0]].first, {}, vp.negated}};
    c.steps = axes[0][idx[0]].second;
    for (std::size_t i = 1; i < axes.size(); ++i) {
      c.vp.nouns.push_back(axes[i][idx[i]].first);
      c.steps += axes[i][idx[i]].second;
    }
    if (c.vp != vp) found.push_back(std::move(c));
    std::size_t k = 0;
    while (k < axes.size() && ++idx[k] == axes[k].size()) idx[k++] = 0;
    if (k == axes.size()) break;
  }
  std::sort(found.begin(), found.end(), [](const Candidate &a, const Candidate &b) {
    return std::tie(a.steps, a.vp.verb, a.vp.nouns) < std::tie(b.steps, b.vp.verb, b.vp.nouns);
  });

  ClosureResult result;
  if (found.size() > cap) {
    result.truncated = true;
    found.resize(cap);
  }
  for (const Candidate &c : found) result.derivations.push_back(derive(taxonomy, fact, fact.with_vp(c.vp)));
  return result;
}

Implication contrapose(const Taxonomy &taxonomy, const Implication &implication) {
  if (!entails(taxonomy, implication.from, implication.to)) {
    not_entailed(implication.from, implication.to);
  }
  return Implication{implication.to.negate(), implication.from.negate()};
}

SentenceExpr implication_to_disjunction(const Taxonomy &taxonomy, const Implication &implication) {
  if (!entails(taxonomy, implication.from, implication.to)) {
    not_entailed(implication.from, implication.to);
  }
  return SentenceExpr::disj(SentenceExpr::atom(implication.from.negate()),
                            SentenceExpr::atom(implication.to));
}

std::string to_string(const ConditionalRule &rule) {
  std::string head;
  if (const auto *text = std::get_if<std::string>(&rule.antecedent)) {
    head = "\"" + *text + "\"";
  } else {
    head = to_string(std::get<Sentence>(rule.antecedent));
  }
  return "if " + head + " then " + to_string(rule.consequent);
}

PropagationResult propagate_conditional(const Taxonomy &taxonomy, const ConditionalRule &rule,
                                        std::size_t cap) {
  ClosureResult closed = closure(taxonomy, rule.consequent, cap);
  PropagationResult out;
  out.truncated = closed.truncated;
  for (const Derivation &d : closed.derivations) {
    out.rules.push_back(ConditionalRule{rule.antecedent, d.conclusion});
  }
  return out;
}

} // namespace vpl
