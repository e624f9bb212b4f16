#ifndef FILEBASIS_CONSTRUCTION_HPP_
#define FILEBASIS_CONSTRUCTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filebasis/budget.hpp"
#include "filebasis/rational.hpp"
#include "filebasis/words.hpp"

namespace filebasis {

  //! Inputs of the construction together with the constants derived from them.
  struct ConstructionParams {
    int          n = 63;
    Rational     lambda1{1, 315};
    std::int64_t N = 315;
    //! Overrides the default q; used as given, even when it is below
    //! 1/(1 - 2 mu).
    std::optional<Rational> q_override;

    [[nodiscard]] Alphabet alphabet() const noexcept {
      return {n};
    }
    //! 2/n
    [[nodiscard]] Rational lambda2() const;
    //! lambda1 + 5 lambda2
    [[nodiscard]] Rational mu() const;
    //! q_override if set, otherwise the least rational >= 1/(1 - 2 mu) with
    //! denominator <= 10^6. Empty when mu >= 1/2 and nothing is overridden.
    [[nodiscard]] std::optional<Rational> q() const;
    //! True when q() exists and q() >= 1/(1 - 2 mu) with mu < 1/2.
    [[nodiscard]] bool q_admissible() const;
  };

  //! One exact comparison `lhs relation rhs`.
  struct InequalityCheck {
    std::string name;
    std::string relation;  // "<=", "<", ">=", "=="
    Rational    lhs;
    Rational    rhs;
    bool        holds    = false;
    bool        required = true;
  };

  struct ParamsReport {
    std::vector<InequalityCheck> checks;
    bool                         theorem_scale = false;

    //! All required checks hold.
    [[nodiscard]] bool ok() const;
    [[nodiscard]] InequalityCheck const& find(std::string_view name) const;
  };

  //! Exact evaluation of the lambda1 bound, lambda1 n N >= 1, 2 lambda1 + 13 lambda2 < 1,
  //! mu < 1/2 and the scale margin. Throws MalformedParams for n < 1, N < 1 or
  //! lambda1 outside (0, 1).
  [[nodiscard]] ParamsReport validate_params(ConstructionParams const& p);

  //! One step of the construction: r = x_1^m ... x_n^m w^-1.
  struct Relator {
    std::int64_t i = 0;
    PowerWord    w;
    std::int64_t m = 0;
    PowerWord    r;

    bool operator==(Relator const&) const = default;
  };

  //! x_1^m x_2^m ... x_n^m
  [[nodiscard]] PowerWord regular_block(int n, std::int64_t m);

  //! Per-relator invariants: shape of r, |r| = n m + |w|, the filters on w,
  //! cyclic reducedness, and lambda1 |r| >= |w|.
  [[nodiscard]] std::vector<InequalityCheck>
  check_relator(ConstructionParams const& p, Relator const& rel);

  class Presentation {
   public:
    ConstructionParams   params;
    std::vector<Relator> relators;

    [[nodiscard]] std::int64_t           max_relator_length() const;
    [[nodiscard]] std::vector<PowerWord> relator_words() const;
  };

  //! Relator invariants for every relator plus increasing m and nondecreasing |r| across them.
  [[nodiscard]] std::vector<InequalityCheck>
  validate_presentation(Presentation const& pres);

  //! True when \p w is a legal w_i candidate shape: nonempty, does not start
  //! with x_1^{+-1}, does not end with x_n^{+-1}.
  [[nodiscard]] bool admissible_shape(PowerWord const& w, int n);

  enum class LengthBoundPolicy {
    //! Throw when lambda1 |r| >= |w| fails only if lambda1 n N >= 1 (which implies it).
    automatic,
    //! Always throw when it fails.
    enforce,
    //! Record the failure and keep going.
    report_only
  };

  //! m = N |w| + i and r = x_1^m ... x_n^m w^-1. Structural invariants always throw
  //! ConstructionError; the length bound follows \p policy.
  [[nodiscard]] Relator build_relator(ConstructionParams const& p,
                                      std::int64_t              i,
                                      PowerWord const&          w,
                                      LengthBoundPolicy         policy
                                      = LengthBoundPolicy::automatic);

  struct NextWordResult {
    bool         found = false;  // false: budget exceeded
    PowerWord    w;
    std::int64_t candidates_examined = 0;
    std::int64_t regular_words_tested = 0;
    std::string  reason;
  };

  //! Deg-lex-least w of admissible shape that is not proved equal (by the D
  //! test) to any regular word of length <= (n+1)|w| + n^4 L.
  [[nodiscard]] NextWordResult next_w(ConstructionParams const&   p,
                                      std::vector<Relator> const& rel,
                                      Budget const&               budget);

  struct GenerateResult {
    Presentation             presentation;
    bool                     truncated = false;
    std::string              reason;
    std::vector<std::string> warnings;
  };

  //! Runs next_w / build_relator up to \p count times. Stops early with
  //! truncated = true when a step exceeds the budget. Never reaches a fixed
  //! point at theorem scale: the full relator set is infinite.
  [[nodiscard]] GenerateResult generate(ConstructionParams const& p,
                                        std::int64_t              count,
                                        Budget const&             budget,
                                        LengthBoundPolicy         policy
                                        = LengthBoundPolicy::automatic);

}  // namespace filebasis

#endif  // FILEBASIS_CONSTRUCTION_HPP_
