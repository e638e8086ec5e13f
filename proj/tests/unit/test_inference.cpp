#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vpl/inference.hpp"

using namespace vpl;
using fixtures::S;

namespace {

Taxonomy house() {
  Taxonomy t;
  t.declare("house", "property", Relation::kind_of);
  t.declare("california", "us", Relation::part_of);
  t.declare("buy", "own", Relation::way_of);
  t.declare("hybrid_car", "car", Relation::kind_of);
  t.declare("potato", "vegetable", Relation::kind_of);
  t.declare("bake", "cook", Relation::way_of);
  t.declare("tokyo", "japan", Relation::part_of);
  t.declare("la", "us", Relation::part_of);
  t.declare("fly", "travel", Relation::way_of);
  t.declare("x", "something", Relation::kind_of);
  t.declare("y", "do", Relation::way_of);
  return t;
}

} // namespace

TEST_CASE("entailment examples") {
  Taxonomy t = house();
  CHECK(entails(t, S("i past bake*potato @[1,2]"), S("i past cook*vegetable @[1,2]")));
  CHECK(entails(t, S("i past_perfect not own*car"), S("i past_perfect not buy*hybrid_car")));
  CHECK(entails(t, S("i past bake*potato @[1,2]"), S("i past bake*potato @[1,2]")));
  CHECK_FALSE(entails(t, S("i past_perfect cook*vegetable"), S("i past_perfect bake*potato")));
}

TEST_CASE("entailment keeps subject and frame") {
  Taxonomy t = house();
  try {
    (void)entails(t, S("i past_perfect bake*potato"), S("you past_perfect cook*potato"));
    FAIL("expected subject_mismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::subject_mismatch);
  }
  try {
    (void)entails(t, S("i past_perfect bake*potato"), S("i future cook*potato"));
    FAIL("expected tense_mismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::tense_mismatch);
  }
  CHECK_THROWS_AS((void)entails(t, S("i past bake*potato @[1,1]"), S("i past bake*potato @[1,2]")),
                  Error);
  CHECK_THROWS_AS((void)entails(t, S("i past_perfect fly*tokyo*la"), S("i past_perfect fly*tokyo")),
                  Error);
}

TEST_CASE("derivations replay") {
  Taxonomy t = house();
  Derivation d = derive(t, S("i past_perfect not own*car"), S("i past_perfect not buy*hybrid_car"));
  REQUIRE(d.steps.size() == 2);
  CHECK(d.steps[0].rule == Rule::contraposition);
  CHECK(d.steps[0].from == "own");
  CHECK(d.steps[0].to == "buy");
  CHECK_FALSE(d.steps[0].slot.has_value());
  CHECK(d.steps[1].slot == 0);
  CHECK(replay(t, d) == S("i past_perfect not buy*hybrid_car"));

  Derivation r = derive(t, S("i past_perfect bake*potato"), S("i past_perfect bake*potato"));
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].rule == Rule::reflexive);

  CHECK_THROWS_AS((void)derive(t, S("i past_perfect cook*potato"), S("i past_perfect bake*potato")),
                  Error);

  Derivation forged = derive(t, S("i past_perfect bake*potato"), S("i past_perfect cook*potato"));
  forged.steps[0].to = "bake";
  forged.steps[0].from = "cook";
  CHECK_THROWS_AS((void)replay(t, forged), Error);
}

TEST_CASE("seven conclusions from the house fact") {
  Taxonomy t = house();
  ClosureResult r = closure(t, S("i future buy*house*california"));
  CHECK_FALSE(r.truncated);
  std::vector<std::string> got;
  for (const auto &d : r.derivations) got.push_back(to_string(d.conclusion));
  CHECK(got == std::vector<std::string>{
                   "i future buy*house*us",
                   "i future buy*property*california",
                   "i future own*house*california",
                   "i future buy*property*us",
                   "i future own*house*us",
                   "i future own*property*california",
                   "i future own*property*us",
               });
  for (const auto &d : r.derivations) {
    CHECK(replay(t, d) == d.conclusion);
    CHECK(entails(t, d.source, d.conclusion));
  }
}

TEST_CASE("closure edge cases") {
  Taxonomy t = house();
  CHECK(closure(t, S("i past_perfect y*x")).derivations.empty());
  ClosureResult capped = closure(t, S("i future buy*house*california"), 3);
  CHECK(capped.truncated);
  CHECK(capped.derivations.size() == 3);
  ClosureResult neg = closure(t, S("i past_perfect not own*car"));
  std::vector<std::string> got;
  for (const auto &d : neg.derivations) got.push_back(to_string(d.conclusion));
  CHECK(got == std::vector<std::string>{"i past_perfect not buy*car", "i past_perfect not own*hybrid_car",
                                        "i past_perfect not buy*hybrid_car"});
  ClosureResult top = closure(t, S("i past_perfect do*something"));
  CHECK(top.derivations.empty());
}

TEST_CASE("contraposition") {
  Taxonomy t = house();
  Implication imp{S("i past bake*potato @[1,1]"), S("i past cook*vegetable @[1,1]")};
  Implication c = contrapose(t, imp);
  CHECK(c.from == S("i past not cook*vegetable @[1,1]"));
  CHECK(c.to == S("i past not bake*potato @[1,1]"));
  CHECK(entails(t, c.from, c.to));
  CHECK(contrapose(t, c) == imp);

  Implication two{S("i past_perfect fly*tokyo*la"), S("i past_perfect travel*japan*us")};
  CHECK(contrapose(t, two).from == S("i past_perfect not travel*japan*us"));

  Implication bad{S("i past_perfect cook*potato"), S("i past_perfect bake*potato")};
  try {
    (void)contrapose(t, bad);
    FAIL("expected not_entailed");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::not_entailed);
  }
  CHECK_THROWS_AS((void)implication_to_disjunction(t, bad), Error);
}

TEST_CASE("conditional as disjunction") {
  Taxonomy t = house();
  SentenceExpr e = implication_to_disjunction(
      t, {S("i past_perfect bake*potato"), S("i past_perfect cook*vegetable")});
  CHECK(to_string(e) == "NOT(i past_perfect bake*potato) OR (i past_perfect cook*vegetable)");
  SentenceExpr car = implication_to_disjunction(
      t, {S("you past_perfect buy*hybrid_car"), S("you past_perfect own*car")});
  CHECK(to_string(car) == "NOT(you past_perfect buy*hybrid_car) OR (you past_perfect own*car)");
}

TEST_CASE("conditional propagation") {
  Taxonomy t = house();
  ConditionalRule rule{std::string("i get this job"), S("i future buy*house*california")};
  CHECK(to_string(rule) == "if \"i get this job\" then i future buy*house*california");
  PropagationResult r = propagate_conditional(t, rule);
  REQUIRE(r.rules.size() == 7);
  CHECK(to_string(r.rules.back()) == "if \"i get this job\" then i future own*property*us");
  for (const auto &p : r.rules) CHECK(p.antecedent == rule.antecedent);

  ConditionalRule lone{S("i past_perfect y*x"), S("i past_perfect y*x")};
  CHECK(propagate_conditional(t, lone).rules.empty());
  CHECK(to_string(lone) == "if i past_perfect y*x then i past_perfect y*x");
}

TEST_CASE("closure agrees with the product-space oracle") {
  std::mt19937 rng(21);
  for (int round = 0; round < 25; ++round) {
    oracle::SmallKb kb = oracle::random_kb(rng, 4, 4, 0.3);
    Taxonomy t = kb.build();
    for (std::size_t arity : {1u, 2u}) {
      oracle::ProductSpace space(kb, arity);
      for (const auto &p : space.all_points()) {
        Sentence fact{"i", Tense::past_perfect, space.phrase(p), std::nullopt};
        std::set<VerbPhrase> expected;
        for (const auto &q : space.closure(p)) expected.insert(space.phrase(q));
        ClosureResult r = closure(t, fact);
        std::set<VerbPhrase> got;
        for (const auto &d : r.derivations) got.insert(d.conclusion.vp);
        REQUIRE(got.size() == r.derivations.size());
        REQUIRE(got == expected);
      }
    }
  }
}
