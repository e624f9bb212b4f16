#ifndef FILEBASIS_ERRORS_HPP_
#define FILEBASIS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace filebasis {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Text or letter data that does not parse, or indices outside 1..n.
  class MalformedInput : public Error {
   public:
    using Error::Error;
  };

  //! Construction parameters outside their domain (n < 1, lambda1 not in (0,1)).
  class MalformedParams : public Error {
   public:
    using Error::Error;
  };

  //! A relator or presentation violates one of its defining invariants.
  class ConstructionError : public Error {
   public:
    using Error::Error;
  };

  //! A checker was called on input that does not meet its precondition.
  class PreconditionViolation : public Error {
   public:
    using Error::Error;
  };

  //! Some face label admits no special selection.
  class NoSelection : public Error {
   public:
    using Error::Error;
  };

  //! Length or exponent arithmetic left the 64-bit range.
  class ArithmeticOverflow : public Error {
   public:
    using Error::Error;
  };

}  // namespace filebasis

#endif  // FILEBASIS_ERRORS_HPP_
