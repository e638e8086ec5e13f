#include "vpl/linguistic.hpp"

#include "vpl/error.hpp"

namespace vpl {

namespace {

[[noreturn]] void unsupported(const std::string &why) {
  throw Error(ErrorCode::unsupported_shape, why);
}

} // namespace

SentenceExpr distribute(const CompoundPhrase &phrase) {
  bool two_verbs = phrase.verbs.size() == 2;
  bool two_objects = phrase.objects.size() == 2;
  if (phrase.verbs.empty() || phrase.objects.empty() || phrase.verbs.size() > 2 ||
      phrase.objects.size() > 2) {
    unsupported("a compound phrase coordinates exactly two verbs or two objects");
  }
  if (two_verbs == two_objects) {
    unsupported(two_verbs ? "coordinating both verbs and objects needs two connectives"
                          : "nothing is coordinated");
  }
  auto make = [&](const std::string &verb, const std::string &object) {
    return SentenceExpr::atom(
        Sentence{phrase.subject, phrase.tense, VerbPhrase{verb, {object}, false}, phrase.timeframe});
  };
  SentenceExpr lhs = make(phrase.verbs.front(), phrase.objects.front());
  SentenceExpr rhs = make(phrase.verbs.back(), phrase.objects.back());
  return phrase.connective == Connective::conj ? SentenceExpr::conj(std::move(lhs), std::move(rhs))
                                               : SentenceExpr::disj(std::move(lhs), std::move(rhs));
}

CompoundPhrase factor(const SentenceExpr &expr) {
  using Op = SentenceExpr::Op;
  if (expr.op() != Op::conj && expr.op() != Op::disj) unsupported("not a binary AND/OR");
  const auto &l = expr.operands()[0];
  const auto &r = expr.operands()[1];
  if (l.op() != Op::atom || r.op() != Op::atom) unsupported("operands must be simple sentences");
  const Sentence &a = l.sentence();
  const Sentence &b = r.sentence();
  if (!a.same_frame(b)) unsupported("sentences differ in subject, tense or timeframe");
  if (a.vp.negated || b.vp.negated) unsupported("negated sentences cannot be factored");
  if (a.vp.arity() != 1 || b.vp.arity() != 1) unsupported("only single-object phrases factor");

  CompoundPhrase out{a.subject, a.tense, a.timeframe,
                     expr.op() == Op::conj ? Connective::conj : Connective::disj, {}, {}};
  bool same_verb = a.vp.verb == b.vp.verb;
  bool same_object = a.vp.nouns[0] == b.vp.nouns[0];
  if (same_verb == same_object) {
    unsupported(same_verb ? "both sentences are identical" : "sentences share neither verb nor object");
  }
  if (same_verb) {
    out.verbs = {a.vp.verb};
    out.objects = {a.vp.nouns[0], b.vp.nouns[0]};
  } else {
    out.verbs = {a.vp.verb, b.vp.verb};
    out.objects = {a.vp.nouns[0]};
  }
  return out;
}

} // namespace vpl
