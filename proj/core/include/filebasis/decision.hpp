#ifndef FILEBASIS_DECISION_HPP_
#define FILEBASIS_DECISION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "filebasis/budget.hpp"
#include "filebasis/construction.hpp"
#include "filebasis/peeling_search.hpp"
#include "filebasis/rational.hpp"
#include "filebasis/words.hpp"

namespace filebasis {

  //! Evidence attached to an answer. Every yes carries a product of
  //! relator conjugates or a rewriting trace that free reduction alone can
  //! replay; a no carries either an abelian obstruction or the statement
  //! that an exhaustive bounded search found nothing.
  struct Witness {
    enum class Kind {
      none,
      free_reduction,       // equal (or distinct) as reduced words
      conjugate_product,    // u v^-1 (resp. u c v^-1 c^-1) == product
      rewrite_trace,        // consecutive words differ by a relator conjugate
      abelian_obstruction,  // exponent-sum difference outside the lattice
      exhaustive_search     // no diagram within the edge bound
    };

    Kind                      kind = Kind::none;
    std::string               engine;
    ConjugateProduct          product;
    std::vector<PowerWord>    trace;
    std::optional<PowerWord>  conjugator;  // u = c v c^-1 for conjugacy
    std::vector<std::int64_t> abelian_difference;
    std::int64_t              diagram_edges = 0;
    std::int64_t              states        = 0;
  };

  struct Outcome {
    Verdict     value = Verdict::budget_exceeded;
    Witness     witness;
    std::string note;
  };

  enum class Engine { diagram, rewrite, both };

  [[nodiscard]] std::string_view to_string(Engine e) noexcept;
  [[nodiscard]] std::string_view to_string(Witness::Kind k) noexcept;

  //! Is there a disc diagram over <A | S> with at most E edges whose contour
  //! reads u v^-1? Exhaustive within min(E, budget.max_edges) edges.
  [[nodiscard]] Outcome in_C(std::span<PowerWord const> S,
                             Rational const&            E,
                             PowerWord const&           u,
                             PowerWord const&           v,
                             Budget const&              budget);

  //! (1 + q L)/2 * (|u| + |v|), L the longest word of S (0 when S is empty).
  [[nodiscard]] Rational d_edge_bound(std::span<PowerWord const> S,
                                      Rational const&            q,
                                      PowerWord const&           u,
                                      PowerWord const&           v);

  //! in_C with E = d_edge_bound(S, q, u, v).
  [[nodiscard]] Outcome in_D(std::span<PowerWord const> S,
                             Rational const&            q,
                             PowerWord const&           u,
                             PowerWord const&           v,
                             Budget const&              budget);

  //! True when the presentation meets every hypothesis under which the D
  //! test is complete: the lambda1 bound, 2 lambda1 + 13 lambda2 < 1, mu < 1/2, an
  //! admissible q, and the relator invariants on every relator.
  [[nodiscard]] bool completeness_contract(Presentation const& p);

  //! Bounded bidirectional search over words joined by relator
  //! substitutions. Only ever answers yes or budget-exceeded.
  [[nodiscard]] Outcome rewrite_search(std::span<PowerWord const> S,
                                       PowerWord const&           u,
                                       PowerWord const&           v,
                                       Budget const&              budget);

  //! u == v in the group presented by \p p.
  [[nodiscard]] Outcome equals_in_G(Presentation const& p,
                                    PowerWord const&    u,
                                    PowerWord const&    v,
                                    Budget const&       budget,
                                    Engine              engine = Engine::both);

  struct NormalFormResult {
    Outcome      outcome;
    PowerWord    normal_form;
    //! Deg-lex-smaller candidates whose comparison ran out of budget.
    std::int64_t undecided_smaller = 0;
    std::int64_t candidates        = 0;
    //! A second regular word proved equal to the input, if one was found.
    std::optional<PowerWord> second_accepted;
    //! The length bound was cut down to the budget.
    bool bound_truncated = false;
  };

  //! Deg-lex-least regular word proved equal to \p g among regular words of
  //! length <= (n+1)|g| + n^4 L (capped by budget.max_word_len). With
  //! \p check_uniqueness the remaining candidates are also tested.
  [[nodiscard]] NormalFormResult
  regular_normal_form(Presentation const& p,
                      PowerWord const&    g,
                      Budget const&       budget,
                      Engine              engine           = Engine::both,
                      bool                check_uniqueness = true);

  //! Conjugacy via annular diagrams with at most q(|u| + |v|) edges. On yes
  //! the witness carries c with u = c v c^-1 in the group.
  [[nodiscard]] Outcome are_conjugate(Presentation const& p,
                                      PowerWord const&    u,
                                      PowerWord const&    v,
                                      Budget const&       budget);

  //! Replays an equality witness using free reduction only.
  [[nodiscard]] bool verify_equality_witness(std::span<PowerWord const> S,
                                             PowerWord const&           u,
                                             PowerWord const&           v,
                                             Witness const&             w);

  //! Replays a conjugacy witness: u c v^-1 c^-1 equals the product.
  [[nodiscard]] bool verify_conjugacy_witness(std::span<PowerWord const> S,
                                              PowerWord const&           u,
                                              PowerWord const&           v,
                                              Witness const&             w);

  //! \p w is a cyclic rotation of some element of S or of its inverse.
  [[nodiscard]] bool is_relator_rotation(std::span<PowerWord const> S,
                                         PowerWord const&           w);

}  // namespace filebasis

#endif  // FILEBASIS_DECISION_HPP_
