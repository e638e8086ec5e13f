#include "vpl/world.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vpl/error.hpp"

namespace vpl {

namespace {

int rank(Status s) {
  switch (s) {
  case Status::not_factual: return 0;
  case Status::unknown: return 1;
  case Status::plan: return 2;
  case Status::factual: return 3;
  }
  return 1;
}

bool comparable_frame(const Sentence &a, const Sentence &b) {
  return a.same_frame(b) && a.vp.arity() == b.vp.arity();
}

} // namespace

void World::assert_fact(const Taxonomy &taxonomy, const Sentence &sentence, Status status) {
  if (sentence.subject.empty()) throw Error(ErrorCode::resolution_error, "sentence has no subject");
  if (sentence.vague()) {
    throw Error(ErrorCode::vague_tense,
                "'" + to_string(sentence) + "' is in the past tense without a timeframe");
  }
  if (status == Status::unknown) {
    throw std::invalid_argument("a fact must be asserted as factual or not_factual");
  }
  taxonomy.validate(sentence.vp);

  bool negative = status == Status::not_factual;
  Sentence literal = negative ? sentence.negate() : sentence;
  if (sentence.tense == Tense::future && !negative) status = Status::plan;

  if (std::find(known_.begin(), known_.end(), literal) != known_.end()) return;
  Sentence opposite = literal.negate();
  for (const Sentence &k : known_) {
    if (!comparable_frame(k, literal)) continue;
    if (vp_leq(taxonomy, k.vp, opposite.vp)) {
      throw Error(ErrorCode::contradiction, "'" + to_string(literal) + "' contradicts '" +
                                                to_string(k) + "'");
    }
  }
  facts_.push_back(Fact{sentence, status});
  known_.push_back(std::move(literal));
}

std::vector<std::string> World::subjects() const {
  std::set<std::string> out;
  for (const Sentence &k : known_) out.insert(k.subject);
  return {out.begin(), out.end()};
}

std::optional<Sentence> World::witness(const Taxonomy &taxonomy, const Sentence &sentence) const {
  if (sentence.vague()) return std::nullopt;
  Sentence opposite = sentence.negate();
  for (const Sentence &k : known_) {
    if (!comparable_frame(k, sentence)) continue;
    if (vp_leq(taxonomy, k.vp, sentence.vp) || vp_leq(taxonomy, k.vp, opposite.vp)) return k;
  }
  return std::nullopt;
}

Status World::eval_atom(const Taxonomy &taxonomy, const Sentence &sentence) const {
  taxonomy.validate(sentence.vp);
  auto w = witness(taxonomy, sentence);
  if (!w) return Status::unknown;
  if (vp_leq(taxonomy, w->vp, sentence.vp)) {
    return sentence.tense == Tense::future ? Status::plan : Status::factual;
  }
  return Status::not_factual;
}

namespace {

Status eval_signed(const World &world, const Taxonomy &taxonomy, const SentenceExpr &expr,
                   bool negated) {
  using Op = SentenceExpr::Op;
  switch (expr.op()) {
  case Op::atom:
    return world.eval_atom(taxonomy, negated ? expr.sentence().negate() : expr.sentence());
  case Op::neg:
    return eval_signed(world, taxonomy, expr.operands()[0], !negated);
  case Op::conj:
  case Op::disj: {
    // De Morgan pushes the pending negation down to the atoms.
    bool take_min = (expr.op() == Op::conj) != negated;
    Status l = eval_signed(world, taxonomy, expr.operands()[0], negated);
    Status r = eval_signed(world, taxonomy, expr.operands()[1], negated);
    bool left = take_min ? rank(l) <= rank(r) : rank(l) >= rank(r);
    return left ? l : r;
  }
  }
  return Status::unknown;
}

} // namespace

Status eval(const World &world, const Taxonomy &taxonomy, const SentenceExpr &expr) {
  return eval_signed(world, taxonomy, expr, false);
}

Status eval_implication(const World &world, const Taxonomy &taxonomy, const Sentence &from,
                        const Sentence &to) {
  Status a = world.eval_atom(taxonomy, from);
  Status b = world.eval_atom(taxonomy, to);
  auto holds = [](Status s) { return s == Status::factual || s == Status::plan; };
  Status truth = from.tense == Tense::future ? Status::plan : Status::factual;
  if (a == Status::not_factual) return truth;
  if (holds(b)) return b;
  if (holds(a) && b == Status::not_factual) return Status::not_factual;
  return Status::unknown;
}

bool law_gated(const Frame &frame) {
  switch (frame.tense) {
  case Tense::past_perfect:
  case Tense::present_continuous: return true;
  case Tense::past: return frame.timeframe.has_value();
  case Tense::future: return false;
  }
  return false;
}

std::string_view to_string(LawVerdict verdict) {
  switch (verdict) {
  case LawVerdict::holds: return "holds";
  case LawVerdict::violation: return "violation";
  case LawVerdict::indeterminate: return "indeterminate";
  }
  return "?";
}

LawReport check_laws(const World &world, const Taxonomy &taxonomy,
                     const std::vector<std::string> &subjects, const std::vector<VerbPhrase> &vps,
                     const std::vector<Frame> &frames) {
  LawReport report;
  for (const auto &subject : subjects) {
    for (const Frame &frame : frames) {
      if (!law_gated(frame)) continue;
      for (const VerbPhrase &vp : vps) {
        Sentence s{subject, frame.tense, vp.core(), frame.timeframe};
        LawEntry entry{s, world.eval_atom(taxonomy, s), world.eval_atom(taxonomy, s.negate()),
                       LawVerdict::indeterminate};
        if (entry.status == Status::unknown && entry.negated_status == Status::unknown) {
          ++report.indeterminate;
        } else {
          ++report.determinate;
          bool pos = entry.status == Status::factual;
          bool neg = entry.negated_status == Status::factual;
          bool exactly_one = pos != neg;
          bool other_refuted = pos ? entry.negated_status == Status::not_factual
                                   : entry.status == Status::not_factual;
          entry.verdict =
              exactly_one && other_refuted ? LawVerdict::holds : LawVerdict::violation;
          if (entry.verdict == LawVerdict::violation) ++report.violations;
        }
        report.entries.push_back(std::move(entry));
      }
    }
  }
  return report;
}

namespace {

// Every phrase whose components are all comparable (above or below) with the
// components of `core`.
void collect_comparable(const Taxonomy &taxonomy, const VerbPhrase &core, std::size_t cap,
                        std::set<VerbPhrase> &out) {
  auto around = [](const Preorder &order, const std::string &id) {
    std::set<std::string> ids;
    for (const Literal &l : order.generalizations(positive(id))) ids.insert(l.id);
    for (const Literal &l : order.specializations(positive(id))) ids.insert(l.id);
    return std::vector<std::string>(ids.begin(), ids.end());
  };
  std::vector<std::vector<std::string>> axes{around(taxonomy.verbs(), core.verb)};
  for (const auto &noun : core.nouns) axes.push_back(around(taxonomy.nouns(), noun));

  std::vector<std::size_t> idx(axes.size(), 0);
  while (out.size() < cap) {
    VerbPhrase vp{axes[0][idx[0]], {}, false};
    for (std::size_t i = 1; i < axes.size(); ++i) vp.nouns.push_back(axes[i][idx[i]]);
    out.insert(std::move(vp));
    std::size_t k = 0;
    while (k < axes.size() && ++idx[k] == axes[k].size()) idx[k++] = 0;
    if (k == axes.size()) break;
  }
}

} // namespace

LawReport audit_world(const World &world, const Taxonomy &taxonomy, std::size_t cap) {
  LawReport total;
  std::set<std::pair<std::string, Frame>> groups;
  for (const Sentence &k : world.known()) groups.insert({k.subject, Frame{k.tense, k.timeframe}});
  for (const auto &[subject, frame] : groups) {
    std::set<VerbPhrase> vps;
    for (const Sentence &k : world.known()) {
      if (k.subject == subject && Frame{k.tense, k.timeframe} == frame) {
        collect_comparable(taxonomy, k.vp.core(), cap, vps);
      }
    }
    LawReport part = check_laws(world, taxonomy, {subject}, {vps.begin(), vps.end()}, {frame});
    total.determinate += part.determinate;
    total.indeterminate += part.indeterminate;
    total.violations += part.violations;
    for (auto &e : part.entries) total.entries.push_back(std::move(e));
  }
  return total;
}

} // namespace vpl
