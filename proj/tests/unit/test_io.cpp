#include <fstream>
#include <random>

#include "doctest.h"
#include "filebasis/errors.hpp"
#include "filebasis/json_io.hpp"
#include "fixtures.hpp"
#include "random_diagrams.hpp"

using namespace filebasis;
using namespace filebasis::testing;

namespace {
  Json load(char const* name) {
    std::ifstream in(std::string(FILEBASIS_TEST_DATA) + "/" + name);
    REQUIRE(in);
    return Json::parse(in);
  }
}  // namespace

TEST_CASE("presentation round trip") {
  for (Presentation const& p : {toy_presentation(), mid_presentation(), theorem_presentation()}) {
    Json const         j    = to_json(p);
    Presentation const back = presentation_from_json(Json::parse(j.dump()));
    CHECK(back.params.n == p.params.n);
    CHECK(back.params.lambda1 == p.params.lambda1);
    CHECK(back.params.N == p.params.N);
    CHECK(back.params.q_override == p.params.q_override);
    CHECK(back.relators == p.relators);
    CHECK(to_json(back).dump() == j.dump());
  }
  Json const j = to_json(toy_presentation());
  CHECK(j["lambda1"] == "1/15");
  CHECK(j["relators"][0]["r"] == "x1^5 x2^5 x3^5 x1^-1 x2^-1");
  CHECK(j["q"] == "3");
}

TEST_CASE("presentation parse errors") {
  Json const good = to_json(toy_presentation());
  Json       a    = good;
  a.erase("relators");
  CHECK_THROWS_AS((void)presentation_from_json(a), MalformedInput);
  Json b       = good;
  b["lambda1"] = "one third";
  CHECK_THROWS_AS((void)presentation_from_json(b), MalformedInput);
  Json c       = good;
  c["lambda1"] = "3/2";
  CHECK_THROWS_AS((void)presentation_from_json(c), MalformedParams);
  Json d                  = good;
  d["relators"][0]["r"]   = "x9";
  CHECK_THROWS_AS((void)presentation_from_json(d), MalformedInput);
  Json e = good;
  e["n"] = 0;
  CHECK_THROWS_AS((void)presentation_from_json(e), MalformedParams);
  Json f = good;
  f["N"] = "2";
  CHECK_THROWS_AS((void)presentation_from_json(f), MalformedInput);
}

TEST_CASE("diagram round trip") {
  std::mt19937_64 rng(41);
  auto const      S = toy_presentation().relator_words();
  for (int trial = 0; trial < 100; ++trial) {
    Diagram const d    = random_diagram(rng, S, 3);
    Diagram const back = diagram_from_json(Json::parse(to_json(d).dump()));
    CHECK(back == d);
  }
}

TEST_CASE("diagram files with arbitrary ids") {
  Diagram const d = diagram_from_json(load("toy_face.json"));
  CHECK(d == one_face_disc(toy_presentation().relators[0].r.letters()));
  CHECK(validate_diagram(d, toy_presentation().relator_words()).ok());

  Diagram const deg = diagram_from_json(load("degenerate.json"));
  CHECK(validate_diagram(deg, toy_presentation().relator_words()).ok());

  Diagram const broken = diagram_from_json(load("broken_involution.json"));
  CHECK(validate_diagram(broken, toy_presentation().relator_words()).has("involution"));
}

TEST_CASE("diagram parse errors") {
  Json const good = load("degenerate.json");
  Json       a    = good;
  a["darts"][1]["id"] = 0;
  CHECK_THROWS_WITH_AS((void)diagram_from_json(a), doctest::Contains("duplicate dart"), MalformedInput);
  Json b = good;
  b["darts"][0]["inv"] = 9;
  CHECK_THROWS_WITH_AS((void)diagram_from_json(b), doctest::Contains("unknown dart"), MalformedInput);
  Json c = good;
  c["darts"][0]["label"] = "x1 x2";
  CHECK_THROWS_AS((void)diagram_from_json(c), MalformedInput);
  Json d = good;
  d["contours"][0][0] = 5;
  CHECK_THROWS_AS((void)diagram_from_json(d), MalformedInput);
  Json e = good;
  e.erase("faces");
  CHECK_THROWS_AS((void)diagram_from_json(e), MalformedInput);
  Json f = good;
  f["darts"][0]["from"] = 7;
  CHECK_THROWS_WITH_AS((void)diagram_from_json(f), doctest::Contains("unknown vertex"), MalformedInput);
}

TEST_CASE("outcome and report serialization") {
  Outcome o;
  o.value          = Verdict::yes;
  o.witness.kind   = Witness::Kind::free_reduction;
  o.witness.engine = "free";
  Json const j     = to_json(o);
  CHECK(j["answer"] == "yes");
  CHECK(j["witness"]["kind"] == "free-reduction");

  Outcome b;
  CHECK(to_json(b)["answer"] == "budget-exceeded");

  ParamsReport const r  = validate_params(ConstructionParams{});
  Json const         jr = to_json(r);
  CHECK(jr["ok"] == true);
  CHECK(jr["theorem_scale"] == true);
  CHECK(jr["checks"][0]["name"] == "lambda1-bound");
}
