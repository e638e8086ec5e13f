#include <doctest.h>

#include "fixtures.hpp"
#include "vpl/dialogue.hpp"

using namespace vpl;
using fixtures::S;

TEST_CASE("question operators") {
  CHECK(to_string(QuestionOperator::which_part) == "WHICH_PART");
  CHECK(question_from_string("What_Kind") == QuestionOperator::which_kind);
  CHECK(question_from_string("how") == QuestionOperator::how);
  CHECK_FALSE(question_from_string("why").has_value());
  CHECK(relation_of(QuestionOperator::how) == Relation::way_of);
  CHECK(relation_of(QuestionOperator::which_part) == Relation::part_of);
}

TEST_CASE("answers come from the world") {
  KnowledgeBase kb = fixtures::load("travel.vpl");
  const Taxonomy &t = kb.taxonomy;
  Sentence q = S("i past travel*japan*us @[30,31]");

  QuestionResult part = apply_question(t, kb.world, QuestionOperator::which_part, q, 1);
  REQUIRE(part.answers.size() == 2);
  CHECK_FALSE(part.reason.has_value());
  CHECK(best_answer(t, part) == S("i past travel*japan*la @[30,31]"));

  QuestionResult how = apply_question(t, kb.world, QuestionOperator::how, q);
  REQUIRE(how.answers.size() == 1);
  CHECK(how.answers[0] == S("i past fly*japan*us @[30,31]"));

  QuestionResult where_from = apply_question(t, kb.world, QuestionOperator::which_part,
                                             S("i past fly*japan*la @[30,31]"), 0);
  REQUIRE(where_from.answers.size() == 1);
  CHECK(where_from.answers[0] == S("i past fly*tokyo*la @[30,31]"));

  QuestionResult none = apply_question(t, kb.world, QuestionOperator::how,
                                       S("i past fly*tokyo*la @[30,31]"));
  CHECK(none.answers.empty());
  CHECK(none.reason == ErrorCode::no_refinement);
  CHECK_FALSE(best_answer(t, none).has_value());
}

TEST_CASE("question errors") {
  KnowledgeBase kb = fixtures::load("travel.vpl");
  auto code_of = [&](QuestionOperator op, const Sentence &s, std::optional<std::size_t> slot) {
    try {
      (void)apply_question(kb.taxonomy, kb.world, op, s, slot);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::parse_error;
  };
  Sentence q = S("i past travel*japan*us @[30,31]");
  CHECK(code_of(QuestionOperator::which_part, q, std::nullopt) == ErrorCode::slot_out_of_range);
  CHECK(code_of(QuestionOperator::which_kind, q, 2) == ErrorCode::slot_out_of_range);
  CHECK(code_of(QuestionOperator::how, S("i past drive*japan*us @[30,31]"), std::nullopt) ==
        ErrorCode::not_factual);
  CHECK(code_of(QuestionOperator::how, S("i past travel*japan*us @[1,2]"), std::nullopt) ==
        ErrorCode::not_factual);
}

TEST_CASE("generated dialogue walks down one edge per turn") {
  KnowledgeBase kb = fixtures::load("house.vpl");
  auto turns = generate_dialogue(kb.taxonomy, kb.world, S("i future own*property*us"));
  REQUIRE(turns.size() == 7);
  std::vector<std::string> text;
  for (const auto &turn : turns) text.push_back(std::string(to_string(turn.speaker)) + ": " + turn.text);
  CHECK(text[0] == "system: i future own*property*us");
  CHECK(text[1] == "user: WHICH_PART[1] * (i future own*property*us)");
  CHECK(text[2] == "system: i future own*property*california");
  CHECK(text[3] == "user: HOW * (i future own*property*california)");
  CHECK(text[4] == "system: i future buy*property*california");
  CHECK(text[5] == "user: WHICH_KIND[0] * (i future buy*property*california)");
  CHECK(text[6] == "system: i future buy*house*california");
  CHECK(std::get<Question>(turns[1].payload) == Question{QuestionOperator::which_part, 1});
  for (std::size_t i = 0; i < turns.size(); ++i) {
    CHECK(turns[i].speaker == (i % 2 == 0 ? Speaker::system : Speaker::user));
  }
}

TEST_CASE("repl keeps a focus and refuses contradictions") {
  KnowledgeBase kb = fixtures::load("travel.vpl");
  ReplState state{kb.world, std::nullopt};
  auto step = [&](const std::string &line) {
    auto [next, response] = repl_step(kb.taxonomy, state, line);
    state = std::move(next);
    return response;
  };
  CHECK(step("? which_part 1 i past travel*japan*us @[30,31]").text ==
        "A: i past travel*japan*la @[30,31]");
  CHECK(step("? how").text == "A: i past fly*japan*la @[30,31]");
  CHECK(step("? which_part 0").text == "A: i past fly*tokyo*la @[30,31]");
  ReplResponse none = step("? how");
  CHECK(none.code == ErrorCode::no_refinement);
  CHECK(step("= i past travel*japan*us @[30,31]").text == "A: factual");
  CHECK(step("= i past walk*japan*us @[30,31]").text == "A: unknown");

  ReplResponse refused = step("! i past not move*asia*us @[30,31]");
  CHECK(refused.code == ErrorCode::unknown_atom);
  refused = step("! i past not travel*japan*us @[30,31]");
  CHECK(refused.code == ErrorCode::contradiction);
  CHECK(refused.text.find("sorry, that contradicts what I know: i past fly*tokyo*la @[30,31]") !=
        std::string::npos);
  std::size_t before = state.world.facts().size();
  CHECK(step("! i past walk*japan*us @[40,41]").text == "A: noted i past walk*japan*us @[40,41]");
  CHECK(state.world.facts().size() == before + 1);
  CHECK(step("= i past walk*japan*us @[40,41]").text == "A: factual");

  ReplResponse bad = step("hello");
  CHECK(bad.code == ErrorCode::parse_error);
  CHECK(bad.text.rfind("ERR: parse_error: 1:1:", 0) == 0);
}
