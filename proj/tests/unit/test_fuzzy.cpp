#include <doctest.h>

#include <cmath>
#include <random>

#include "vpl/fuzzy.hpp"

using namespace vpl;

namespace {

struct Food {
  Preorder nouns{Kind::noun};
  FuzzyTable table;
  NVIso eat{"eat", "food"};

  Food() {
    for (const char *id : {"food", "chicken", "seaweed", "bread", "book"}) nouns.add_atom(id);
    for (const char *id : {"chicken", "seaweed", "bread"}) {
      nouns.declare_relation(id, "food", Relation::kind_of);
    }
    table.add_iso(eat);
    table.set_degree("*", "chicken", "food", 0.95);
    table.set_degree("american", "seaweed", "food", 0.1);
    table.set_degree("japanese", "seaweed", "food", 0.8);
    table.set_degree("*", "book", "food", 0.0);
  }
};

} // namespace

TEST_CASE("adverb buckets") {
  const AdverbScale &s = AdverbScale::standard();
  CHECK(s.adverb_for(0.95) == Adverb::often);
  CHECK(s.adverb_for(0.1) == Adverb::rarely);
  CHECK(s.adverb_for(0.7) == Adverb::often);
  CHECK(s.adverb_for(0.0) == Adverb::never);
  CHECK(s.adverb_for(0.05) == Adverb::rarely);
  CHECK(s.adverb_for(0.2) == Adverb::less_likely);
  CHECK(s.adverb_for(0.4) == Adverb::more_or_less);
  CHECK(s.adverb_for(1.0) == Adverb::often);
  CHECK(s.adverb_for(0.0499) == Adverb::never);
  CHECK(s.adverb_for(0.6999) == Adverb::more_or_less);
  CHECK(to_string(Adverb::more_or_less) == "more or less");
  CHECK(to_string(Adverb::less_likely) == "less likely");
  for (double bad : {-0.01, 1.01, std::nan("")}) {
    try {
      (void)s.adverb_for(bad);
      FAIL("expected out_of_range");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::out_of_range);
    }
  }
}

TEST_CASE("bucket index is monotone in the degree") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const AdverbScale &s = AdverbScale::standard();
  for (int i = 0; i < 2000; ++i) {
    double a = unit(rng), b = unit(rng);
    if (a < b) std::swap(a, b);
    CHECK(s.bucket_index(a) >= s.bucket_index(b));
  }
}

TEST_CASE("frequency statements") {
  Food f;
  CHECK(fuzzy_statement(f.table, "i", f.eat, "chicken") == "i often eat chicken");
  CHECK(fuzzy_statement(f.table, "american", f.eat, "seaweed") == "american rarely eat seaweed");
  CHECK(fuzzy_statement(f.table, "japanese", f.eat, "seaweed") == "japanese often eat seaweed");
  CHECK(fuzzy_statement(f.table, "i", f.eat, "book") == "i never eat book");
  try {
    (void)fuzzy_statement(f.table, "i", f.eat, "seaweed");
    FAIL("expected no_degree");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::no_degree);
  }
  try {
    (void)fuzzy_statement(f.table, "i", NVIso{"drink", "beverage"}, "chicken");
    FAIL("expected no_iso");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::no_iso);
  }
}

TEST_CASE("possibility") {
  Food f;
  CHECK(possibility(f.nouns, f.table, "i", f.eat, "bread"));
  CHECK(possibility(f.nouns, f.table, "american", f.eat, "seaweed"));
  CHECK_FALSE(possibility(f.nouns, f.table, "i", f.eat, "book"));
  f.nouns.declare_relation("book", "food", Relation::kind_of);
  CHECK_FALSE(possibility(f.nouns, f.table, "i", f.eat, "book"));
  CHECK_THROWS_AS((void)possibility(f.nouns, f.table, "i", NVIso{"drink", "food"}, "bread"), Error);
}

TEST_CASE("subject entries shadow the wildcard") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    FuzzyTable t;
    double any = unit(rng), own = unit(rng);
    t.set_degree("*", "x", "c", any);
    bool specific = i % 2 == 0;
    if (specific) t.set_degree("s", "x", "c", own);
    CHECK(t.resolve("s", "x", "c") == (specific ? own : any));
    CHECK(t.resolve("other", "x", "c") == any);
  }
  FuzzyTable t;
  CHECK_THROWS_AS(t.set_degree("*", "x", "c", 1.5), Error);
  t.set_degree("*", "x", "c", 0.3);
  t.set_degree("*", "x", "c", 0.6);
  CHECK(t.resolve("s", "x", "c") == 0.6);
  CHECK_FALSE(t.resolve("s", "y", "c").has_value());
}
