#include "vpl/sentence.hpp"

#include <utility>

#include "vpl/error.hpp"

namespace vpl {

std::string_view to_string(Tense tense) {
  switch (tense) {
  case Tense::past: return "past";
  case Tense::past_perfect: return "past_perfect";
  case Tense::present_continuous: return "present_continuous";
  case Tense::future: return "future";
  }
  return "?";
}

std::optional<Tense> tense_from_string(std::string_view text) {
  if (text == "past") return Tense::past;
  if (text == "past_perfect") return Tense::past_perfect;
  if (text == "present_continuous") return Tense::present_continuous;
  if (text == "future") return Tense::future;
  return std::nullopt;
}

TimeInterval make_interval(std::int64_t start, std::int64_t end) {
  if (start > end) {
    throw Error(ErrorCode::invalid_interval, "interval [" + std::to_string(start) + "," +
                                                 std::to_string(end) + "] ends before it starts");
  }
  return TimeInterval{start, end};
}

std::string to_string(const TimeInterval &interval) {
  return "[" + std::to_string(interval.start) + "," + std::to_string(interval.end) + "]";
}

Sentence Sentence::negate() const { return with_vp(vp.negate()); }

Sentence Sentence::with_vp(VerbPhrase other) const {
  Sentence out = *this;
  out.vp = std::move(other);
  return out;
}

bool Sentence::same_frame(const Sentence &other) const {
  return subject == other.subject && tense == other.tense && timeframe == other.timeframe;
}

std::string to_string(const Sentence &sentence) {
  std::string out = sentence.subject;
  out += ' ';
  out += to_string(sentence.tense);
  out += ' ';
  out += to_string(sentence.vp);
  if (sentence.timeframe) out += " @" + to_string(*sentence.timeframe);
  return out;
}

std::string_view to_string(Status status) {
  switch (status) {
  case Status::factual: return "factual";
  case Status::not_factual: return "not_factual";
  case Status::unknown: return "unknown";
  case Status::plan: return "plan";
  }
  return "?";
}

SentenceExpr SentenceExpr::atom(Sentence sentence) {
  SentenceExpr e;
  e.op_ = Op::atom;
  e.sentence_ = std::move(sentence);
  return e;
}

SentenceExpr SentenceExpr::conj(SentenceExpr lhs, SentenceExpr rhs) {
  SentenceExpr e;
  e.op_ = Op::conj;
  e.operands_.push_back(std::move(lhs));
  e.operands_.push_back(std::move(rhs));
  return e;
}

SentenceExpr SentenceExpr::disj(SentenceExpr lhs, SentenceExpr rhs) {
  SentenceExpr e;
  e.op_ = Op::disj;
  e.operands_.push_back(std::move(lhs));
  e.operands_.push_back(std::move(rhs));
  return e;
}

SentenceExpr SentenceExpr::negation(SentenceExpr inner) {
  if (inner.op_ == Op::atom) return atom(inner.sentence_->negate());
  if (inner.op_ == Op::neg) return std::move(inner.operands_.front());
  SentenceExpr e;
  e.op_ = Op::neg;
  e.operands_.push_back(std::move(inner));
  return e;
}

namespace {

std::string render(const SentenceExpr &expr, SentenceExpr::Op parent, bool right = false) {
  using Op = SentenceExpr::Op;
  switch (expr.op()) {
  case Op::atom: {
    const Sentence &s = expr.sentence();
    if (s.vp.negated) return "NOT(" + to_string(s.negate()) + ")";
    return "(" + to_string(s) + ")";
  }
  case Op::neg:
    return "NOT(" + render(expr.operands()[0], Op::neg) + ")";
  case Op::conj:
  case Op::disj: {
    const char *word = expr.op() == Op::conj ? " AND " : " OR ";
    std::string body = render(expr.operands()[0], expr.op()) + word +
                       render(expr.operands()[1], expr.op(), true);
    // Connectives are left associative, so only a right operand of the same
    // connective needs parentheses; a different connective always gets them.
    bool wrap = (parent == Op::conj || parent == Op::disj) && (parent != expr.op() || right);
    return wrap ? "(" + body + ")" : body;
  }
  }
  return {};
}

} // namespace

std::string to_string(const SentenceExpr &expr) { return render(expr, SentenceExpr::Op::atom); }

} // namespace vpl
