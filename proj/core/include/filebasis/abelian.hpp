#ifndef FILEBASIS_ABELIAN_HPP_
#define FILEBASIS_ABELIAN_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "filebasis/rational.hpp"
#include "filebasis/words.hpp"

namespace filebasis {

  //! Integer row span of the exponent-sum vectors of a relator set, kept in
  //! row echelon (Hermite) form.
  //!
  //! Two words that are equal in the presented group have abelian images in
  //! the same coset of this lattice, so a coset mismatch certifies
  //! inequality; conjugate words also share the coset.
  class AbelianLattice {
   public:
    AbelianLattice(int n, std::span<PowerWord const> relators);

    [[nodiscard]] int n() const noexcept {
      return n_;
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return rows_.size();
    }

    [[nodiscard]] bool contains(std::span<std::int64_t const> v) const;

    //! Abelian images of u and v lie in the same coset.
    [[nodiscard]] bool same_coset(PowerWord const& u, PowerWord const& v) const;

    //! Calls \p visit on every point of base + lattice whose L1 norm is at
    //! most \p l1_bound; stops early (returning false) when visit returns
    //! false or when more than \p max_points points were produced.
    bool for_each_coset_point(
        std::span<std::int64_t const>                            base,
        std::int64_t                                             l1_bound,
        std::int64_t                                             max_points,
        std::function<bool(std::vector<std::int64_t> const&)> const& visit) const;

   private:
    int                               n_;
    std::vector<std::vector<Integer>> rows_;
    std::vector<std::size_t>          pivots_;
  };

  //! The regular word x_1^{v_1} ... x_n^{v_n}.
  [[nodiscard]] PowerWord regular_word(std::span<std::int64_t const> exponents);

}  // namespace filebasis

#endif  // FILEBASIS_ABELIAN_HPP_
