#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = vpl::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string kb(const std::string &name) { return fixtures::data(name).string(); }

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

} // namespace

TEST_CASE("closure lists every conclusion in order") {
  Run r = run({"closure", kb("house.vpl"), "i future buy*house*california"});
  CHECK(r.code == 0);
  auto out = lines(r.out);
  REQUIRE(out.size() == 7);
  CHECK(out[0] == "i future buy*house*us");
  CHECK(out[6] == "i future own*property*us");
}

TEST_CASE("entails and its exit codes") {
  Run yes = run({"entails", kb("hybrid.vpl"), "i past_perfect not own*car",
                 "i past_perfect not buy*hybrid_car"});
  CHECK(yes.code == 0);
  CHECK(yes.out.rfind("true\n", 0) == 0);
  Run no = run({"entails", kb("hybrid.vpl"), "i past_perfect not buy*hybrid_car",
                "i past_perfect not own*car"});
  CHECK(no.code == 1);
  CHECK(no.out == "false\n");
  Run bad = run({"entails", kb("hybrid.vpl"), "i past_perfect not own*car", "i pst x"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("to:1:3:") != std::string::npos);
}

TEST_CASE("machine output is one JSON object per line") {
  Run r = run({"--output", "machine", "closure", kb("house.vpl"), "i future buy*house*california"});
  CHECK(r.code == 0);
  auto out = lines(r.out);
  REQUIRE(out.size() == 1);
  auto j = nlohmann::json::parse(out[0]);
  CHECK(j["command"] == "closure");
  CHECK(j["status"] == "ok");
  CHECK(j["count"] == 7);
  CHECK(j["truncated"] == false);
  CHECK(j["conclusions"][0]["sentence"] == "i future buy*house*us");

  Run err = run({"--output", "machine", "check", kb("house.vpl"), "\"i past_perfect zz*house\""});
  CHECK(err.code == 2);
  auto e = nlohmann::json::parse(lines(err.out).at(0));
  CHECK(e["status"] == "error");
  CHECK(e["code"] == "unknown_atom");
}

TEST_CASE("closure cap") {
  Run r = run({"--cap", "3", "--output", "machine", "closure", kb("house.vpl"),
               "i future buy*house*california"});
  auto j = nlohmann::json::parse(lines(r.out).at(0));
  CHECK(j["truncated"] == true);
  CHECK(j["count"] == 3);
}

TEST_CASE("other subcommands") {
  CHECK(run({"render", kb("laptop.vpl"), "he past_perfect not own*computer"}).out ==
        "FORALL t in [0,80]: he not own_t * computer\n");
  CHECK(run({"contrapose", kb("examples.vpl"), "i past bake*potato @[5,5]",
             "i past cook*vegetable @[5,5]"})
            .out == "i past not cook*vegetable @[5,5] => i past not bake*potato @[5,5]\n");
  CHECK(run({"fuzzy", kb("food.vpl"), "japanese", "eat", "seaweed"}).out ==
        "japanese often eat seaweed\n");
  CHECK(run({"fuzzy", kb("food.vpl"), "i", "eat", "bread"}).out == "i can eat bread\n");
  Run laws = run({"laws", kb("examples.vpl")});
  CHECK(laws.code == 0);
  CHECK(laws.out.find("0 violations") != std::string::npos);
  Run dialogue = run({"dialogue", kb("house.vpl"), "i future own*property*us"});
  CHECK(lines(dialogue.out).size() == 7);
  Run ask = run({"ask", kb("travel.vpl"), "how", "i past fly*tokyo*la @[30,31]"});
  CHECK(ask.code == 1);
  CHECK(ask.out == "no refinement\n");
  CHECK(run({"check", kb("travel.vpl"), "i past travel*japan*us @[30,31]"}).out == "factual\n");
}

TEST_CASE("repl over a stream") {
  Run r = run({"repl", kb("travel.vpl")},
              "? which_part 1 i past travel*japan*us @[30,31]\n\n? how\nexit\n= i past fly*a*b\n");
  auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == "A: i past travel*japan*la @[30,31]");
  CHECK(out[1] == "A: i past fly*japan*la @[30,31]");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"closure"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  Run missing = run({"laws", kb("missing.vpl")});
  CHECK(missing.code == 2);
}
