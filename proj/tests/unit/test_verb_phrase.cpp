#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vpl/verb_phrase.hpp"

using namespace vpl;
using fixtures::VP;

namespace {

Taxonomy travel() {
  Taxonomy t;
  t.declare("tokyo", "japan", Relation::part_of);
  t.declare("la", "us", Relation::part_of);
  t.declare("fly", "travel", Relation::way_of);
  t.declare("walk", "travel", Relation::way_of);
  t.declare("hybrid_car", "car", Relation::kind_of);
  t.declare("buy", "own", Relation::way_of);
  t.declare("potato", "vegetable", Relation::kind_of);
  t.declare("bake", "cook", Relation::way_of);
  return t;
}

} // namespace

TEST_CASE("negation flips the polarity flag only") {
  VerbPhrase vp = VP("buy*hybrid_car");
  VerbPhrase n = vp_negate(vp);
  CHECK(n.negated);
  CHECK(n.verb == "buy");
  CHECK(n.nouns == std::vector<std::string>{"hybrid_car"});
  CHECK(vp_negate(n) == vp);
  CHECK(to_string(vp_negate(VP("fly*tokyo*la"))) == "not fly*tokyo*la");
}

TEST_CASE("product order examples") {
  Taxonomy t = travel();
  CHECK(vp_leq(t, VP("fly*tokyo*la"), VP("travel*japan*us")));
  CHECK_FALSE(vp_leq(t, VP("travel*japan*us"), VP("fly*tokyo*la")));
  CHECK(vp_leq(t, VP("not own*car"), VP("not buy*hybrid_car")));
  CHECK_FALSE(vp_leq(t, VP("not buy*hybrid_car"), VP("not own*car")));
  CHECK(vp_leq(t, VP("bake*potato"), VP("bake*potato")));
  CHECK_FALSE(vp_leq(t, VP("bake*potato"), VP("not bake*potato")));
}

TEST_CASE("arity and atom checks") {
  Taxonomy t = travel();
  try {
    (void)vp_leq(t, VP("fly*tokyo"), VP("fly*tokyo*la"));
    FAIL("expected arity_mismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::arity_mismatch);
  }
  try {
    (void)vp_leq(t, VP("fly*osaka"), VP("fly*tokyo"));
    FAIL("expected unknown_atom");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::unknown_atom);
  }
  try {
    t.bind(VP("tokyo*fly"));
    FAIL("expected kind_mismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kind_mismatch);
  }
}

TEST_CASE("a verb keeps its slot count once bound") {
  Taxonomy t = travel();
  t.bind(VP("fly*tokyo*la"));
  CHECK(t.arity_of("fly") == 2);
  CHECK_THROWS_AS(t.bind(VP("fly*tokyo")), Error);
  t.bind(VP("do*tokyo"));
  t.bind(VP("do*tokyo*la"));
}

TEST_CASE("an identifier belongs to one kind") {
  Taxonomy t;
  t.register_atom("run", Kind::verb);
  CHECK_THROWS_AS(t.register_atom("run", Kind::noun), Error);
  CHECK_THROWS_AS(t.declare("run", "x", Relation::kind_of), Error);
}

TEST_CASE("bounds") {
  Taxonomy t = travel();
  CHECK(to_string(t.top(1)) == "do*something");
  CHECK(to_string(t.bottom(2)) == "not do*something*something");
  for (const char *text : {"fly*tokyo", "bake*vegetable", "own*car"}) {
    CHECK(vp_leq(t, VP(text), t.top(1)));
    CHECK(vp_leq(t, t.bottom(1), vp_negate(VP(text))));
  }
}

TEST_CASE("witness chains move the verb first") {
  Taxonomy t = travel();
  auto chain = vp_chain(t, VP("bake*potato"), VP("cook*vegetable"));
  REQUIRE(chain);
  CHECK(*chain == std::vector<VerbPhrase>{VP("bake*potato"), VP("cook*potato"), VP("cook*vegetable")});
  auto same = vp_chain(t, VP("bake*potato"), VP("bake*potato"));
  REQUIRE(same);
  CHECK(same->size() == 1);
  auto walk = vp_chain(t, VP("walk*tokyo"), VP("travel*japan"));
  REQUIRE(walk);
  CHECK(walk->size() == 3);
  for (std::size_t i = 0; i + 1 < walk->size(); ++i) CHECK(vp_leq(t, (*walk)[i], (*walk)[i + 1]));
  CHECK_FALSE(vp_chain(t, VP("cook*vegetable"), VP("bake*potato")));
  auto neg = vp_chain(t, VP("not own*car"), VP("not buy*hybrid_car"));
  REQUIRE(neg);
  CHECK(neg->size() == 3);
  CHECK((*neg)[1] == VP("not buy*car"));
}

TEST_CASE("vp_leq agrees with the product-space oracle") {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    oracle::SmallKb kb = oracle::random_kb(rng, 4, 4, 0.3);
    Taxonomy t = kb.build();
    for (std::size_t arity : {1u, 2u}) {
      oracle::ProductSpace space(kb, arity);
      auto points = space.all_points();
      for (const auto &a : points)
        for (const auto &b : points)
          REQUIRE(vp_leq(t, space.phrase(a), space.phrase(b)) == space.leq(a, b));
    }
  }
}

TEST_CASE("chains exist exactly for comparable pairs and step one edge") {
  std::mt19937 rng(12);
  for (int round = 0; round < 20; ++round) {
    oracle::SmallKb kb = oracle::random_kb(rng, 4, 3, 0.3);
    Taxonomy t = kb.build();
    oracle::ProductSpace space(kb, 2);
    auto points = space.all_points();
    for (const auto &a : points)
      for (const auto &b : points) {
        auto chain = vp_chain(t, space.phrase(a), space.phrase(b));
        REQUIRE(chain.has_value() == space.leq(a, b));
        if (!chain) continue;
        REQUIRE(chain->front() == space.phrase(a));
        REQUIRE(chain->back() == space.phrase(b));
        for (std::size_t i = 0; i + 1 < chain->size(); ++i) {
          const VerbPhrase &x = (*chain)[i], &y = (*chain)[i + 1];
          int changed = x.verb != y.verb;
          for (std::size_t s = 0; s < x.nouns.size(); ++s) changed += x.nouns[s] != y.nouns[s];
          REQUIRE(changed == 1);
          REQUIRE(vp_leq(t, x, y));
        }
      }
  }
}
