#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qflag/cli.hpp"

using namespace qflag;
using nlohmann::json;

namespace {

struct RunOut {
  int code = 0;
  std::string out;
  std::string err;
  json js() const { return json::parse(out); }
};

RunOut run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  RunOut r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("set literals") {
  CHECK(parse_set_literal("1,3") == std::vector<int>{1, 3});
  CHECK(parse_set_literal("2..5") == std::vector<int>{2, 3, 4, 5});
  CHECK(parse_set_literal("1,3..5,7") == std::vector<int>{1, 3, 4, 5, 7});
  CHECK(parse_set_literal("").empty());
  CHECK_THROWS_AS(parse_set_literal("1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_literal("5..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_literal("2x"), std::invalid_argument);
}

TEST_CASE("separation report") {
  auto r = run({"sep", "--n", "7", "--i", "1,3", "--j", "2,4"});
  REQUIRE(r.code == 0);
  json j = r.js();
  CHECK(j["weak"] == false);
  CHECK(j["strong"] == false);
  CHECK(j["ext_E"] == 1);
  CHECK(j["ext_D"] == json({2, 1}));
  CHECK(j["hom"] == json({2, 1}));
}

TEST_CASE("hom ext and commutation exponent") {
  auto h = run({"hom", "--n", "4", "--i", "1,2", "--j", "1,3"});
  REQUIRE(h.code == 0);
  CHECK(h.js()["i_to_j"] == 2);
  CHECK(h.js()["j_to_i"] == 1);

  auto e = run({"ext", "--n", "7", "--i", "1,3", "--j", "2,4"});
  REQUIRE(e.code == 0);
  CHECK(e.js()["ext_E"] == 1);

  auto c = run({"c", "--n", "4", "--i", "1,2", "--j", "1,3"});
  REQUIRE(c.code == 0);
  CHECK(c.js()["c"] == 1);

  // commutation exponent is undefined for a crossing pair
  auto bad = run({"c", "--n", "4", "--i", "1,3", "--j", "2,4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("weakly separated") != std::string::npos);
}

TEST_CASE("collections by size formulas") {
  auto r = run({"collection", "rectangle", "--n", "4", "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.js()["count"] == 5);
  CHECK(r.js()["maximal"] == true);

  auto e = run({"collection", "extended", "--n", "7", "--J", "1..4", "--k", "3"});
  REQUIRE(e.code == 0);
  CHECK(e.js()["count"] == 22);

  auto m = run({"collection", "maximality"}, r.out);
  REQUIRE(m.code == 0);
  CHECK(m.js()["maximal"] == true);

  auto p = run({"collection", "rectangle", "--n", "4", "--k", "2", "--pretty"});
  REQUIRE(p.code == 0);
  CHECK(p.out.find("count=5") != std::string::npos);
}

TEST_CASE("exchange and flip act on piped collections") {
  auto r = run({"collection", "rectangle", "--n", "4", "--k", "2"});
  auto x = run({"exchange", "--a", "1", "--b", "2", "--c", "3", "--d", "4"}, r.out);
  REQUIRE(x.code == 0);
  json sets = x.js()["sets"];
  bool has24 = false;
  for (const auto& s : sets) has24 = has24 || s == json({2, 4});
  CHECK(has24);

  // the square move needs every witness in place
  auto bad = run({"exchange", "--L", "1", "--a", "2", "--b", "3", "--c", "4", "--d", "5"},
                 r.out);
  CHECK(bad.code == 2);
}

TEST_CASE("schedule lists flips and reach searches the move graph") {
  auto s = run({"schedule", "--n", "5", "--J", "2,3", "--k", "3"});
  REQUIRE(s.code == 0);
  CHECK(s.js()["count"] == 4);
  CHECK(s.js()["steps"].size() == 4);

  auto r = run({"collection", "rectangle", "--n", "4", "--k", "2"});
  auto found = run({"reach", "--target", "2,4", "--max-depth", "2"}, r.out);
  CHECK(found.code == 0);
  CHECK(found.js()["found"] == true);
  auto missed = run({"reach", "--target", "2,4", "--max-depth", "0"}, r.out);
  CHECK(missed.code == 1);
  CHECK(missed.js()["found"] == false);
}

TEST_CASE("seed output and mutation") {
  auto s = run({"seed", "--n", "4", "--k", "2"});
  REQUIRE(s.code == 0);
  json j = s.js();
  CHECK(j["labels"][0] == json({1, 3}));
  CHECK(j["labels"].size() == 5);
  CHECK(j["frozen"] == json({false, true, true, true, true}));

  auto m = run({"mutate", "--n", "4", "--k", "2", "--at", "0"});
  REQUIRE(m.code == 0);
  CHECK(m.js()["labels"][0] == json({2, 4}));

  auto rt = run({"mutate", "--in", "-", "--at", "0"}, m.out);
  REQUIRE(rt.code == 0);
  CHECK(rt.js()["labels"] == j["labels"]);
  CHECK(rt.js()["B"] == j["B"]);
  CHECK(rt.js()["L"] == j["L"]);

  auto q = run({"qmutate", "--n", "4", "--k", "2", "--at", "0,0"});
  REQUIRE(q.code == 0);
  CHECK(q.js()["labels"][0] == json({1, 3}));
  for (const auto& b : q.js()["symbolic"]) CHECK(b == false);
}

TEST_CASE("quantum relation verifier") {
  auto p = run({"qverify", "plucker", "--n", "4"});
  REQUIRE(p.code == 0);
  CHECK(p.js()["ok"] == true);
  CHECK(p.js()["checked"].get<int>() > 0);

  auto q = run({"qverify", "quasicomm", "--n", "3"});
  CHECK(q.code == 0);

  auto huge = run({"qverify", "plucker", "--n", "9"});
  CHECK(huge.code == 2);
  auto junk = run({"qverify", "nonsense", "--n", "3"});
  CHECK(junk.code == 2);
}

TEST_CASE("word and factor words") {
  auto w = run({"word", "--n", "4", "--K", "2"});
  REQUIRE(w.code == 0);
  CHECK(w.js()["letters"] == json({3, 2, 1, 2, 3}));
  CHECK(w.js()["reduced"] == true);

  auto f = run({"word", "--n", "7", "--K", "2,4,6", "--factor", "5"});
  REQUIRE(f.code == 0);
  CHECK(f.js()["letters"] == json({2, 3, 1, 2}));

  auto m = run({"word", "--n", "3", "--modules"});
  REQUIRE(m.code == 0);
  CHECK(m.js()["simple_top"] == true);
  CHECK(m.js()["beta"].size() == 3);
}

TEST_CASE("letter quiver command") {
  auto q = run({"bfz", "--n", "4"});
  REQUIRE(q.code == 0);
  CHECK(q.js()["r"] == 6);

  // an explicit word equal to the constructed one gives the same quiver
  auto w = run({"bfz", "--n", "3", "--word", "1,2,1"});
  auto v = run({"bfz", "--n", "3"});
  REQUIRE(w.code == 0);
  CHECK(w.js() == v.js());

  auto tail = run({"bfz", "--n", "7", "--K", "1,2,4,5,6"});
  REQUIRE(tail.code == 0);
  CHECK(tail.js()["r"] == 12);
  CHECK(tail.js()["mutable"] == json({1, 2, 3, 5, 6, 7}));

  auto bad = run({"bfz", "--n", "3", "--word", "1,1"});
  CHECK(bad.code == 2);
}

TEST_CASE("verification harness subcommand") {
  auto v = run({"verify-all", "--only", "7,12"});
  REQUIRE(v.code == 0);
  json j = v.js();
  REQUIRE(j.size() == 2);
  CHECK(j[0]["id"] == 7);
  CHECK(j[0]["pass"] == true);
  CHECK(j[1]["id"] == 12);

  auto p = run({"verify-all", "--only", "12", "--pretty"});
  CHECK(p.code == 0);
  CHECK(p.out.find("[pass] 12") != std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"sep", "--n", "4", "--i", "1"}).code == 2);      // missing --j
  CHECK(run({"sep", "--n", "4", "--i", "0,1", "--j", "2"}).code == 2);
  CHECK(run({"help"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
