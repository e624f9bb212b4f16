#ifndef FILEBASIS_PEELING_SEARCH_HPP_
#define FILEBASIS_PEELING_SEARCH_HPP_

// Search for van Kampen diagrams by peeling boundary faces.
//
// A nondegenerate disc (or annular) diagram always has a face sharing an
// edge e with a contour. Deleting e merges that face into the outside: the
// contour letter on e is replaced by the rest of the face label, and the
// result is again a disc (annular) diagram with one edge and one face fewer.
// Freely reducing the contour never needs more faces. So a cyclic word w
// bounds a disc diagram whose faces have total perimeter <= P if and only if
// the empty word is reachable from w by such replacements, each costing the
// face perimeter, with total cost <= P. States are cyclic words kept in a
// canonical form (cyclically reduced, least rotation), which identifies
// diagrams up to the choice of base point.

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "filebasis/budget.hpp"
#include "filebasis/words.hpp"

namespace filebasis {

  //! conjugator * relator * conjugator^-1
  struct Conjugate {
    PowerWord conjugator;
    PowerWord relator;

    bool operator==(Conjugate const&) const = default;
  };

  using ConjugateProduct = std::vector<Conjugate>;

  //! Free reduction of the product of the conjugates.
  [[nodiscard]] PowerWord evaluate(ConjugateProduct const& product);

  //! Position of a letter inside a face label: word(relator, sign)[offset].
  struct FaceSlot {
    std::uint32_t relator = 0;
    std::int32_t  sign    = 1;
    std::uint32_t offset  = 0;
  };

  //! Face labels indexed by letter for the replacement step.
  class FaceLibrary {
   public:
    explicit FaceLibrary(std::span<PowerWord const> relators);

    [[nodiscard]] std::size_t size() const noexcept {
      return forward_.size();
    }
    [[nodiscard]] Letters const& word(std::size_t relator, int sign) const {
      return sign > 0 ? forward_[relator] : backward_[relator];
    }
    [[nodiscard]] std::int64_t perimeter(std::size_t relator) const {
      return static_cast<std::int64_t>(forward_[relator].size());
    }
    //! Slots holding letter \p a.
    [[nodiscard]] std::span<FaceSlot const> slots_for(Letter a) const;

    //! The face label read from slot.offset onwards.
    [[nodiscard]] Letters rotated(FaceSlot slot) const;

    //! True when \p w is a cyclic rotation of some relator or its inverse.
    [[nodiscard]] bool is_face_label(std::span<Letter const> w) const;

   private:
    std::vector<Letters>                                  forward_;
    std::vector<Letters>                                  backward_;
    std::unordered_map<Letter, std::vector<FaceSlot>>     slots_;
    std::unordered_map<Letters, std::size_t, LettersHash> canonical_;
  };

  //! Cyclically reduce and rotate to the least rotation.
  [[nodiscard]] Letters canonical_cyclic(std::span<Letter const> w);

  struct PeelStep {
    std::uint32_t position = 0;
    FaceSlot      slot;
  };

  enum class SearchStatus { found, exhausted, truncated };

  //! Dijkstra over canonical cyclic words, ordered by face perimeter spent.
  class PeelingSearch {
   public:
    struct Node {
      Letters       word;
      std::int64_t  cost   = 0;
      std::int64_t  parent = -1;
      PeelStep      step;
    };

    //! With \p toward_empty the search only looks for the empty word: a
    //! move of cost P shortens the word by at most P, so states with
    //! cost + |word| above the budget are pruned and explored in order of
    //! cost + |word|.
    PeelingSearch(FaceLibrary const& faces,
                  Budget const&      budget,
                  std::int64_t       perimeter_budget,
                  bool               toward_empty = false);

    //! Explores from \p start until \p is_goal accepts a settled node or the
    //! space within the perimeter budget is exhausted. With no goal the
    //! whole reachable space is settled.
    SearchStatus run(std::span<Letter const>                           start,
                     std::function<bool(std::int64_t node)> const& is_goal
                     = nullptr);

    [[nodiscard]] Node const& node(std::int64_t id) const {
      return nodes_[static_cast<std::size_t>(id)];
    }
    [[nodiscard]] std::int64_t goal() const noexcept {
      return goal_;
    }
    [[nodiscard]] std::size_t states() const noexcept {
      return nodes_.size();
    }
    //! Settled node holding canonical word \p w, or -1.
    [[nodiscard]] std::int64_t find(Letters const& w) const;
    [[nodiscard]] std::vector<PeelStep> path_to(std::int64_t id) const;
    [[nodiscard]] bool truncated() const noexcept {
      return truncated_;
    }

   private:
    FaceLibrary const*                                     faces_;
    Budget                                                 budget_;
    std::int64_t                                           perimeter_budget_;
    bool                                                   toward_empty_;
    std::vector<Node>                                      nodes_;
    std::unordered_map<Letters, std::int64_t, LettersHash> index_;
    std::int64_t                                           goal_      = -1;
    bool                                                   truncated_ = false;
  };

  //! Replays a peeling path from a linear start word and returns the
  //! bookkeeping that turns it into a certificate:
  //!   start == evaluate(product) * conjugator * current * conjugator^-1
  //! holds in the free group.
  struct PeelReplay {
    Letters          current;
    Letters          conjugator;
    ConjugateProduct product;
  };

  [[nodiscard]] PeelReplay replay_peeling(FaceLibrary const&          faces,
                                          std::span<Letter const>     start,
                                          std::span<PeelStep const>   steps);

}  // namespace filebasis

#endif  // FILEBASIS_PEELING_SEARCH_HPP_
