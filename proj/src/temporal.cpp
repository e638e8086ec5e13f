#include "vpl/temporal.hpp"

#include <algorithm>
#include <set>

#include "vpl/error.hpp"

namespace vpl {

std::string_view to_string(Quantifier q) { return q == Quantifier::exists ? "EXISTS" : "FORALL"; }

std::string to_string(const TemporalStatement &ts) {
  std::string out = std::string(to_string(ts.quantifier)) + " t in " + to_string(ts.interval) +
                    ": " + ts.subject + " ";
  if (ts.vp.negated) out += "not ";
  out += ts.vp.verb + "_t";
  for (const auto &noun : ts.vp.nouns) out += " * " + noun;
  return out;
}

TemporalStatement render(const Sentence &sentence, const TimeInterval &lifetime) {
  Quantifier q = sentence.vp.negated ? Quantifier::forall : Quantifier::exists;
  if (sentence.tense == Tense::past_perfect && !sentence.timeframe) {
    return TemporalStatement{q, lifetime, sentence.subject, sentence.vp};
  }
  if (sentence.tense == Tense::past && sentence.timeframe) {
    if (!lifetime.contains(*sentence.timeframe)) {
      throw Error(ErrorCode::interval_out_of_lifetime,
                  "timeframe " + to_string(*sentence.timeframe) + " is outside the lifetime " +
                      to_string(lifetime));
    }
    return TemporalStatement{q, *sentence.timeframe, sentence.subject, sentence.vp};
  }
  throw Error(ErrorCode::unsupported_tense,
              "cannot render '" + to_string(sentence) +
                  "': only past_perfect and timed past sentences have a quantified form");
}

Sentence inverse_render(const TemporalStatement &ts, const TimeInterval &lifetime) {
  bool canonical = (ts.quantifier == Quantifier::exists) != ts.vp.negated;
  if (!canonical) {
    throw Error(ErrorCode::non_canonical_form,
                "'" + to_string(ts) + "' has no surface form");
  }
  if (!lifetime.contains(ts.interval)) {
    throw Error(ErrorCode::interval_out_of_lifetime,
                to_string(ts.interval) + " is outside the lifetime " + to_string(lifetime));
  }
  if (ts.interval == lifetime) return Sentence{ts.subject, Tense::past_perfect, ts.vp, std::nullopt};
  return Sentence{ts.subject, Tense::past, ts.vp, ts.interval};
}

TemporalStatement negate_quantified(const TemporalStatement &ts) {
  TemporalStatement out = ts;
  out.quantifier = ts.quantifier == Quantifier::exists ? Quantifier::forall : Quantifier::exists;
  out.vp = ts.vp.negate();
  return out;
}

bool temporal_entails(const Taxonomy &taxonomy, const TemporalStatement &a,
                      const TemporalStatement &b, const TemporalOptions &options) {
  if (a.subject != b.subject) {
    throw Error(ErrorCode::subject_mismatch,
                "subjects differ: '" + a.subject + "' and '" + b.subject + "'");
  }
  bool order = vp_leq(taxonomy, a.vp, b.vp);
  if (a.quantifier == Quantifier::exists && b.quantifier == Quantifier::exists) {
    return order && b.interval.contains(a.interval);
  }
  if (a.quantifier == Quantifier::forall && b.quantifier == Quantifier::forall) {
    return order && a.interval.contains(b.interval);
  }
  if (!options.mixed_quantifier_entailment) return false;
  if (a.quantifier == Quantifier::forall) {
    bool overlap = std::max(a.interval.start, b.interval.start) <=
                   std::min(a.interval.end, b.interval.end);
    return order && overlap;
  }
  // Over one shared instant EXISTS and FORALL say the same thing.
  return order && a.interval == b.interval && a.interval.start == a.interval.end;
}

std::vector<std::pair<std::string, SentenceExpr>>
personal_or(const std::vector<Edge> &premises, const VerbPhrase &specific,
            const VerbPhrase &general, const std::vector<PremiseAcceptance> &subjects) {
  // Each accepting person's order is exactly the premise set.
  Taxonomy accepted;
  for (const Edge &edge : premises) accepted.declare(edge.lower, edge.upper, edge.label);
  auto ensure = [&accepted](const std::string &id, Kind kind) {
    if (!accepted.kind_of_atom(id)) accepted.register_atom(id, kind);
  };
  for (const VerbPhrase *vp : {&specific, &general}) {
    ensure(vp->verb, Kind::verb);
    for (const auto &noun : vp->nouns) ensure(noun, Kind::noun);
  }
  if (!vp_leq(accepted, specific, general)) {
    throw Error(ErrorCode::not_entailed, "the premises do not order '" + to_string(specific) +
                                             "' below '" + to_string(general) + "'");
  }

  std::vector<std::pair<std::string, SentenceExpr>> out;
  for (const PremiseAcceptance &person : subjects) {
    std::set<std::size_t> got(person.accepted.begin(), person.accepted.end());
    bool all = true;
    for (std::size_t i = 0; i < premises.size(); ++i) all = all && got.count(i);
    if (!all) continue;
    Sentence never{person.subject, Tense::past_perfect, specific.negate(), std::nullopt};
    Sentence has{person.subject, Tense::past_perfect, general, std::nullopt};
    out.emplace_back(person.subject,
                     SentenceExpr::disj(SentenceExpr::atom(never), SentenceExpr::atom(has)));
  }
  std::sort(out.begin(), out.end(),
            [](const auto &l, const auto &r) { return l.first < r.first; });
  return out;
}

} // namespace vpl
