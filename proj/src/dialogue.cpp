#include "vpl/dialogue.hpp"

#include <algorithm>
#include <map>

#include "vpl/dsl.hpp"

namespace vpl {

namespace {

bool holds(Status s) { return s == Status::factual || s == Status::plan; }

void require_factual(const Taxonomy &taxonomy, const World &world, const Sentence &s) {
  if (!holds(world.eval_atom(taxonomy, s))) {
    throw Error(ErrorCode::not_factual, "'" + to_string(s) + "' is not known to hold");
  }
}

const Preorder &order_for(const Taxonomy &taxonomy, QuestionOperator op) {
  return op == QuestionOperator::how ? taxonomy.verbs() : taxonomy.nouns();
}

} // namespace

QuestionResult apply_question(const Taxonomy &taxonomy, const World &world, QuestionOperator op,
                              const Sentence &sentence, std::optional<std::size_t> slot) {
  taxonomy.validate(sentence.vp);
  std::size_t target = 0;
  if (op != QuestionOperator::how) {
    if (!slot) {
      if (sentence.vp.arity() > 1) {
        throw Error(ErrorCode::slot_out_of_range,
                    "a slot is required for a phrase with " +
                        std::to_string(sentence.vp.arity()) + " nouns");
      }
      slot = 0;
    }
    if (*slot >= sentence.vp.arity()) {
      throw Error(ErrorCode::slot_out_of_range, "slot " + std::to_string(*slot) +
                                                    " is out of range for '" +
                                                    to_string(sentence.vp) + "'");
    }
    target = *slot;
  }
  require_factual(taxonomy, world, sentence);

  const Preorder &order = order_for(taxonomy, op);
  const std::string &current =
      op == QuestionOperator::how ? sentence.vp.verb : sentence.vp.nouns[target];
  Literal here{current, sentence.vp.negated};

  QuestionResult result;
  for (const Literal &candidate : order.specializations(here, relation_of(op))) {
    // Equally specific atoms (cycles) are not refinements.
    if (order.leq(here, candidate)) continue;
    Sentence answer = sentence;
    if (op == QuestionOperator::how) {
      answer.vp.verb = candidate.id;
    } else {
      answer.vp.nouns[target] = candidate.id;
    }
    if (holds(world.eval_atom(taxonomy, answer))) result.answers.push_back(std::move(answer));
  }
  std::sort(result.answers.begin(), result.answers.end(),
            [](const Sentence &a, const Sentence &b) { return to_string(a) < to_string(b); });
  if (result.answers.empty()) result.reason = ErrorCode::no_refinement;
  return result;
}

std::optional<Sentence> best_answer(const Taxonomy &taxonomy, const QuestionResult &result) {
  for (const Sentence &a : result.answers) {
    bool minimal = std::none_of(result.answers.begin(), result.answers.end(),
                                [&](const Sentence &b) {
                                  return b != a && vp_leq(taxonomy, b.vp, a.vp) &&
                                         !vp_leq(taxonomy, a.vp, b.vp);
                                });
    if (minimal) return a;
  }
  return std::nullopt;
}

std::string_view to_string(Speaker speaker) {
  return speaker == Speaker::system ? "system" : "user";
}

std::string question_text(const Question &question, const Sentence &about) {
  std::string text(to_string(question.op));
  if (question.slot) text += "[" + std::to_string(*question.slot) + "]";
  return text + " * (" + to_string(about) + ")";
}

namespace {

// Most specific known literal below `root`; ties go to the smallest phrase.
Sentence ground_fact(const Taxonomy &taxonomy, const World &world, const Sentence &root) {
  std::vector<Sentence> below;
  for (const Sentence &k : world.known()) {
    if (k.same_frame(root) && vp_leq(taxonomy, k.vp, root.vp)) below.push_back(k);
  }
  std::sort(below.begin(), below.end(),
            [](const Sentence &a, const Sentence &b) { return a.vp < b.vp; });
  for (const Sentence &k : below) {
    bool minimal = std::none_of(below.begin(), below.end(), [&](const Sentence &o) {
      return vp_leq(taxonomy, o.vp, k.vp) && !vp_leq(taxonomy, k.vp, o.vp);
    });
    if (minimal) return k;
  }
  return root;
}

// Farthest generalization of `id` that is not a designated bound, with the
// chain of atoms from it back down to `id`.
std::vector<std::string> descent(const Preorder &order, const std::string &id, bool negated) {
  Literal from{id, negated};
  std::vector<std::string> best{id};
  for (const Literal &g : order.generalizations(from)) {
    if (order.is_top(g.id)) continue;
    auto path = negated ? order.upward_path(g.id, id) : order.upward_path(id, g.id);
    if (!negated) std::reverse(path.begin(), path.end());
    if (path.size() > best.size()) best = std::move(path);
  }
  return best;
}

QuestionOperator operator_for(const Preorder &order, const std::string &a, const std::string &b) {
  auto label = order.edge_label(a, b);
  if (!label) label = order.edge_label(b, a);
  if (label == Relation::part_of) return QuestionOperator::which_part;
  if (label == Relation::way_of) return QuestionOperator::how;
  return QuestionOperator::which_kind;
}

int priority(QuestionOperator op) {
  switch (op) {
  case QuestionOperator::which_part: return 0;
  case QuestionOperator::how: return 1;
  case QuestionOperator::which_kind: return 2;
  }
  return 3;
}

} // namespace

std::vector<DialogueTurn> generate_dialogue(const Taxonomy &taxonomy, const World &world,
                                            const Sentence &root) {
  taxonomy.validate(root.vp);
  require_factual(taxonomy, world, root);
  Sentence ground = ground_fact(taxonomy, world, root);
  bool neg = ground.vp.negated;

  // One descent per component: index 0 is the verb, i + 1 is noun slot i.
  std::vector<std::vector<std::string>> chains;
  chains.push_back(descent(taxonomy.verbs(), ground.vp.verb, neg));
  for (const auto &noun : ground.vp.nouns) chains.push_back(descent(taxonomy.nouns(), noun, neg));
  std::vector<std::size_t> pos(chains.size(), 0);

  Sentence current = ground;
  current.vp.verb = chains[0].front();
  for (std::size_t i = 0; i < ground.vp.nouns.size(); ++i) {
    current.vp.nouns[i] = chains[i + 1].front();
  }

  std::vector<DialogueTurn> turns;
  turns.push_back({Speaker::system, to_string(current), current});
  for (;;) {
    std::optional<std::size_t> pick;
    QuestionOperator pick_op = QuestionOperator::which_kind;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      if (pos[c] + 1 >= chains[c].size()) continue;
      const Preorder &order = c == 0 ? taxonomy.verbs() : taxonomy.nouns();
      QuestionOperator op = operator_for(order, chains[c][pos[c]], chains[c][pos[c] + 1]);
      if (!pick || priority(op) < priority(pick_op)) {
        pick = c;
        pick_op = op;
      }
    }
    if (!pick) break;
    std::size_t c = *pick;
    Question q{pick_op, c == 0 ? std::nullopt : std::optional<std::size_t>(c - 1)};
    turns.push_back({Speaker::user, question_text(q, current), q});
    ++pos[c];
    if (c == 0) {
      current.vp.verb = chains[c][pos[c]];
    } else {
      current.vp.nouns[c - 1] = chains[c][pos[c]];
    }
    turns.push_back({Speaker::system, to_string(current), current});
  }
  return turns;
}

namespace {

ReplResponse answer(std::string text) { return {"A: " + std::move(text), std::nullopt}; }

ReplResponse failure(ErrorCode code, const std::string &message) {
  return {"ERR: " + std::string(to_string(code)) + ": " + message, code};
}

} // namespace

std::pair<ReplState, ReplResponse> repl_step(const Taxonomy &taxonomy, ReplState state,
                                             std::string_view line) {
  ReplState next = state;
  try {
    ReplCommand command = parse_repl_command(line);
    if (auto *ask = std::get_if<AskCommand>(&command)) {
      std::optional<Sentence> about = ask->sentence ? ask->sentence : next.focus;
      if (!about) {
        return {std::move(state),
                failure(ErrorCode::not_factual, "no sentence given and nothing in focus")};
      }
      QuestionResult result = apply_question(taxonomy, next.world, ask->op, *about, ask->slot);
      auto best = best_answer(taxonomy, result);
      if (!best) {
        next.focus = about;
        return {std::move(next),
                {"A: nothing more specific is known", ErrorCode::no_refinement}};
      }
      next.focus = best;
      return {std::move(next), answer(to_string(*best))};
    }
    if (auto *assertion = std::get_if<AssertCommand>(&command)) {
      const Sentence &s = assertion->sentence;
      taxonomy.validate(s.vp);
      if (auto w = next.world.witness(taxonomy, s);
          w && !vp_leq(taxonomy, w->vp, s.vp)) {
        return {std::move(state),
                failure(ErrorCode::contradiction,
                        "sorry, that contradicts what I know: " + to_string(*w))};
      }
      next.world.assert_fact(taxonomy, s);
      next.focus = s;
      return {std::move(next), answer("noted " + to_string(s))};
    }
    const auto &eval_cmd = std::get<EvalCommand>(command);
    Status status = eval(next.world, taxonomy, eval_cmd.expr);
    return {std::move(next), answer(std::string(to_string(status)))};
  } catch (const Error &e) {
    if (e.code() == ErrorCode::contradiction) {
      return {std::move(state), failure(e.code(), std::string("sorry, ") + e.what())};
    }
    return {std::move(state), failure(e.code(), e.what())};
  }
}

} // namespace vpl
