#include "fixtures.hpp"

namespace filebasis::testing {

  ConstructionParams toy_params(Rational q) {
    ConstructionParams p;
    p.n          = 3;
    p.lambda1    = Rational(1, 15);
    p.N          = 2;
    p.q_override = q;
    return p;
  }

  Presentation toy_presentation(Rational q) {
    Presentation P;
    P.params = toy_params(q);
    P.relators.push_back(build_relator(P.params, 1, parse_word("x2 x1")));
    return P;
  }

  Presentation toy_presentation_long(Rational q) {
    Presentation P;
    P.params   = toy_params(q);
    P.params.N = 5;
    P.relators.push_back(build_relator(P.params, 1, parse_word("x2 x1"), LengthBoundPolicy::enforce));
    return P;
  }

  Presentation mid_presentation() {
    Presentation P;
    P.params.n       = 27;
    P.params.lambda1 = Rational(1, 135);
    P.params.N       = 5;
    std::int64_t i   = 1;
    for (char const* w : {"x2 x1", "x2 x1^-1", "x3 x1"}) {
      P.relators.push_back(build_relator(P.params, i++, parse_word(w), LengthBoundPolicy::enforce));
    }
    return P;
  }

  Presentation theorem_presentation() {
    Presentation P;
    P.params = ConstructionParams{};
    P.relators.push_back(build_relator(P.params, 1, parse_word("x2 x1"), LengthBoundPolicy::enforce));
    return P;
  }

}  // namespace filebasis::testing
