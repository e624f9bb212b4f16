#ifndef FILEBASIS_TESTS_FIXTURES_HPP_
#define FILEBASIS_TESTS_FIXTURES_HPP_

#include "filebasis/construction.hpp"

namespace filebasis::testing {

  //! n = 3, lambda1 = 1/15, N = 2. mu > 1/2 here, so q has no admissible
  //! value; \p q is used as an override.
  ConstructionParams toy_params(Rational q = Rational(3));
  //! One relator r_1 = x1^5 x2^5 x3^5 x1^-1 x2^-1.
  Presentation toy_presentation(Rational q = Rational(3));

  //! n = 3, lambda1 = 1/15, N = 5: r_1 = x1^11 x2^11 x3^11 x1^-1 x2^-1,
  //! which satisfies |w| <= lambda1 |r|.
  Presentation toy_presentation_long(Rational q = Rational(3));

  //! n = 27, lambda1 = 1/135, N = 5. Every parameter inequality of the
  //! construction holds except the n >= 63 flag. Relators for
  //! w = x2 x1, x2 x1^-1, x3 x1.
  Presentation mid_presentation();

  //! n = 63, lambda1 = 1/315, N = 315, one relator.
  Presentation theorem_presentation();

}  // namespace filebasis::testing

#endif  // FILEBASIS_TESTS_FIXTURES_HPP_
