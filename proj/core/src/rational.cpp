#include "filebasis/rational.hpp"

#include <cctype>

#include "filebasis/errors.hpp"

namespace filebasis {

  namespace {
    Integer parse_integer(std::string_view s, std::string_view whole) {
      std::size_t pos = 0;
      bool        neg = false;
      if (!s.empty() && s[0] == '-') {
        neg = true;
        pos = 1;
      }
      if (pos == s.size()) {
        throw MalformedInput("malformed rational '" + std::string(whole) + "'");
      }
      Integer v = 0;
      for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) {
          throw MalformedInput("malformed rational '" + std::string(whole) + "'");
        }
        v = v * 10 + (s[pos] - '0');
      }
      return neg ? Integer(-v) : v;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
      text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
      text.remove_suffix(1);
    }
    std::size_t const slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(text, text));
    }
    Integer const num = parse_integer(text.substr(0, slash), text);
    std::string_view const den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') {
      throw MalformedInput("malformed rational '" + std::string(text) + "'");
    }
    Integer const den = parse_integer(den_text, text);
    if (den == 0) {
      throw MalformedInput("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  std::string to_string(Rational const& x) {
    Integer const num = boost::multiprecision::numerator(x);
    Integer const den = boost::multiprecision::denominator(x);
    if (den == 1) {
      return num.str();
    }
    return num.str() + "/" + den.str();
  }

  Integer floor(Rational const& x) {
    Integer const num = boost::multiprecision::numerator(x);
    Integer const den = boost::multiprecision::denominator(x);
    Integer       q   = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) {
      --q;
    }
    return q;
  }

  namespace {
    Integer ceil(Rational const& x) {
      return -floor(-x);
    }
  }  // namespace

  Rational least_rational_at_least(Rational const& x, std::int64_t max_den) {
    if (boost::multiprecision::denominator(x) <= max_den) {
      return x;
    }
    // Stern-Brocot descent keeping lo = a/b < x < hi = c/d. Every fraction
    // strictly between lo and hi has denominator >= b + d, so once that
    // exceeds max_den the upper bound is the answer.
    Integer const D = max_den;
    Integer       a = floor(x), b = 1, c = a + 1, d = 1;
    while (b + d <= D) {
      Rational const xb_a = x * Rational(b) - Rational(a);  // > 0
      Rational const c_xd = Rational(c) - x * Rational(d);  // > 0
      if (Rational(a + c, b + d) < x) {
        Integer const k = ceil(xb_a / c_xd) - 1;  // >= 1
        a += k * c;
        b += k * d;
      } else {
        Integer k = ceil(c_xd / xb_a) - 1;  // >= 1
        Integer const cap = (D - d) / b;
        if (k > cap) {
          k = cap;
        }
        c += k * a;
        d += k * b;
      }
    }
    return Rational(c, d);
  }

}  // namespace filebasis
