#ifndef FILEBASIS_RATIONAL_HPP_
#define FILEBASIS_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace filebasis {

  //! Exact rational used for every inequality check; no floating point.
  using Rational = boost::multiprecision::cpp_rational;
  using Integer  = boost::multiprecision::cpp_int;

  //! Accepts `p/q` or `p` with optional leading minus. Throws MalformedInput.
  [[nodiscard]] Rational parse_rational(std::string_view text);

  //! `p/q` in lowest terms, or `p` when the denominator is 1.
  [[nodiscard]] std::string to_string(Rational const& x);

  //! Least rational r >= x whose denominator is at most max_den.
  [[nodiscard]] Rational least_rational_at_least(Rational const& x,
                                                 std::int64_t    max_den);

  //! Largest integer not above x.
  [[nodiscard]] Integer floor(Rational const& x);

}  // namespace filebasis

#endif  // FILEBASIS_RATIONAL_HPP_
