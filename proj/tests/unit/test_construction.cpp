#include <random>

#include "doctest.h"
#include "filebasis/construction.hpp"
#include "filebasis/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace filebasis;
using filebasis::testing::brute_first_w;
using filebasis::testing::toy_params;
using filebasis::testing::toy_presentation;

namespace {
  PowerWord W(char const* s) {
    return parse_word(s);
  }

  ConstructionParams params(int n, Rational l1, std::int64_t N) {
    ConstructionParams p;
    p.n       = n;
    p.lambda1 = std::move(l1);
    p.N       = N;
    return p;
  }

  //! (4 + 2 n l / (1 - l)) l <= 1/n with l = a/b, cleared of denominators:
  //! n a (4 (b - a) + 2 n a) <= b (b - a).
  bool hand_lambda1_bound(std::int64_t n, std::int64_t a, std::int64_t b) {
    return n * a * (4 * (b - a) + 2 * n * a) <= b * (b - a);
  }
}  // namespace

TEST_CASE("validate_params at theorem scale") {
  ParamsReport const r = validate_params(ConstructionParams{});
  CHECK(r.ok());
  CHECK(r.theorem_scale);
  CHECK(r.find("lambda1-bound").holds);
  InequalityCheck const& c = r.find("2lambda1+13lambda2<1");
  CHECK(c.holds);
  CHECK(c.lhs == Rational(132, 315));
  CHECK(r.find("lambda1*n*N>=1").lhs == 63);
  CHECK(r.find("scale-margin").holds);
  CHECK_FALSE(r.find("scale-margin").required);
  CHECK_THROWS_AS((void)r.find("nope"), PreconditionViolation);
}

TEST_CASE("validate_params small n") {
  ParamsReport const r = validate_params(params(4, Rational(1, 20), 5));
  CHECK_FALSE(r.theorem_scale);
  CHECK(r.find("lambda1-bound").holds);
  CHECK_FALSE(r.find("mu<1/2").holds);
  CHECK_FALSE(validate_params(toy_params()).find("mu<1/2").holds);
  CHECK_FALSE(toy_params().q_admissible());
  ConstructionParams no_q = toy_params();
  no_q.q_override.reset();
  CHECK_FALSE(no_q.q().has_value());
}

TEST_CASE("lambda1 bound against cleared denominators") {
  for (std::int64_t n = 1; n <= 80; ++n) {
    for (std::int64_t b : {n, 2 * n, 4 * n, 5 * n, 5 * n + 1, 6 * n, 20 * n}) {
      if (b < 2) {
        continue;
      }
      ParamsReport const r = validate_params(params(static_cast<int>(n), Rational(1, b), 1));
      CHECK_MESSAGE(r.find("lambda1-bound").holds == hand_lambda1_bound(n, 1, b), "n=" << n << " b=" << b);
    }
    CHECK(validate_params(params(static_cast<int>(n), Rational(1, 5 * n), 1)).find("lambda1-bound").holds);
  }
  CHECK_FALSE(validate_params(params(63, Rational(1, 252), 315)).find("lambda1-bound").holds);
  CHECK_FALSE(hand_lambda1_bound(63, 1, 252));
}

TEST_CASE("validate_params rejects bad input") {
  CHECK_THROWS_AS((void)validate_params(params(0, Rational(1, 5), 1)), MalformedParams);
  CHECK_THROWS_AS((void)validate_params(params(3, Rational(0), 1)), MalformedParams);
  CHECK_THROWS_AS((void)validate_params(params(3, Rational(1), 1)), MalformedParams);
  CHECK_THROWS_AS((void)validate_params(params(3, Rational(1, 5), 0)), MalformedParams);
}

TEST_CASE("q defaults") {
  ConstructionParams const p;
  auto const               q = p.q();
  REQUIRE(q);
  Rational const floor_q = 1 / (1 - 2 * p.mu());
  CHECK(*q >= floor_q);
  CHECK(*q - floor_q < Rational(1, 1000));
  CHECK(p.q_admissible());
}

TEST_CASE("build_relator examples") {
  Relator const r = build_relator(toy_params(), 1, W("x2 x1"));
  CHECK(r.m == 5);
  CHECK(to_string(r.r) == "x1^5 x2^5 x3^5 x1^-1 x2^-1");
  CHECK(r.r.length() == 3 * r.m + 2);

  Relator const big = build_relator(ConstructionParams{}, 1, W("x2 x1"));
  CHECK(big.m == 631);
  CHECK(big.r.length() == 63 * 631 + 2);
  CHECK(big.r.runs().size() == 65);
  for (InequalityCheck const& c : check_relator(ConstructionParams{}, big)) {
    CHECK_MESSAGE(c.holds, c.name);
  }
}

TEST_CASE("build_relator length bound policies") {
  ConstructionParams const p = toy_params();
  CHECK_NOTHROW((void)build_relator(p, 1, W("x2 x1")));
  CHECK_NOTHROW((void)build_relator(p, 1, W("x2 x1"), LengthBoundPolicy::report_only));
  CHECK_THROWS_WITH_AS((void)build_relator(p, 1, W("x2 x1"), LengthBoundPolicy::enforce),
                       doctest::Contains("lambda1|r|>=|w|"), ConstructionError);
  auto const checks = check_relator(p, build_relator(p, 1, W("x2 x1")));
  for (InequalityCheck const& c : checks) {
    if (c.name == "lambda1|r|>=|w|") {
      CHECK_FALSE(c.holds);
      CHECK(c.lhs == Rational(17, 15));
      CHECK(c.rhs == 2);
    } else {
      CHECK_MESSAGE(c.holds, c.name);
    }
  }
}

TEST_CASE("build_relator rejects bad w") {
  ConstructionParams const p = toy_params();
  CHECK_THROWS_AS((void)build_relator(p, 1, W("x1 x2")), ConstructionError);
  CHECK_THROWS_AS((void)build_relator(p, 1, W("x2 x3")), ConstructionError);
  CHECK_THROWS_AS((void)build_relator(p, 1, W("x2")), ConstructionError);
  CHECK_THROWS_AS((void)build_relator(p, 1, W("x4 x1")), ConstructionError);
  CHECK_THROWS_AS((void)build_relator(p, 0, W("x2 x1")), ConstructionError);
  ConstructionParams huge = p;
  huge.N                  = std::int64_t{1} << 62;
  CHECK_THROWS_AS((void)build_relator(huge, 1, W("x2 x1")), ArithmeticOverflow);
}

TEST_CASE("next_w over the free group matches the brute-force scan") {
  for (int n = 3; n <= 7; ++n) {
    ConstructionParams p = params(n, Rational(1, 5 * n), 5);
    NextWordResult const r = next_w(p, {}, Budget{});
    REQUIRE(r.found);
    CHECK(r.w.letters() == brute_first_w(n));
    CHECK(r.w == W("x2 x1"));
  }
  NextWordResult const big = next_w(ConstructionParams{}, {}, Budget{});
  REQUIRE(big.found);
  CHECK(big.w == W("x2 x1"));
  CHECK(admissible_shape(W("x2 x1"), 3));
  CHECK_FALSE(admissible_shape(W("x1 x2"), 3));
  CHECK_FALSE(admissible_shape(PowerWord{}, 3));
}

TEST_CASE("generate") {
  GenerateResult const none = generate(toy_params(), 0, Budget{});
  CHECK(none.presentation.relators.empty());
  CHECK_FALSE(none.truncated);

  GenerateResult const one = generate(toy_params(), 1, Budget{});
  REQUIRE(one.presentation.relators.size() == 1);
  CHECK(one.presentation.relators[0] == toy_presentation().relators[0]);
  REQUIRE(one.warnings.size() == 1);
  CHECK(one.warnings[0].find("lambda1|r|>=|w|") != std::string::npos);
  CHECK(cyclically_reduce(one.presentation.relators[0].r).conjugator.empty());

  GenerateResult const again = generate(toy_params(), 1, Budget{});
  CHECK(again.presentation.relators == one.presentation.relators);

  GenerateResult const big = generate(ConstructionParams{}, 1, Budget{});
  REQUIRE(big.presentation.relators.size() == 1);
  CHECK(big.presentation.relators[0].m == 631);
  CHECK(big.warnings.empty());
}

TEST_CASE("generate stops at the budget instead of guessing") {
  GenerateResult const g = generate(toy_params(), 2, Budget{16, 16, 2000});
  CHECK(g.truncated);
  CHECK(g.presentation.relators.size() == 1);
  CHECK(g.reason.find("step 2") != std::string::npos);

  ConstructionParams no_q = toy_params();
  no_q.q_override.reset();
  GenerateResult const h = generate(no_q, 2, Budget{16, 16, 2000});
  CHECK(h.truncated);
  CHECK(h.reason.find("q") != std::string::npos);
}

TEST_CASE("validate_presentation cross-relator checks") {
  Presentation const mid = filebasis::testing::mid_presentation();
  for (InequalityCheck const& c : validate_presentation(mid)) {
    CHECK_MESSAGE(c.holds, c.name);
  }
  CHECK(validate_params(mid.params).ok());
  CHECK_FALSE(validate_params(mid.params).theorem_scale);

  Presentation bad = mid;
  std::swap(bad.relators[0], bad.relators[2]);
  bool saw_23 = false;
  for (InequalityCheck const& c : validate_presentation(bad)) {
    if (c.name == "|r|-nondecreasing") {
      saw_23 = true;
      CHECK_FALSE(c.holds);
    }
  }
  CHECK(saw_23);

  Presentation dup = mid;
  dup.relators[1]  = dup.relators[0];
  bool saw_22      = false;
  for (InequalityCheck const& c : validate_presentation(dup)) {
    if (c.name == "m-increasing") {
      saw_22 = true;
      CHECK_FALSE(c.holds);
    }
  }
  CHECK(saw_22);
}
