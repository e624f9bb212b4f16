#ifndef FILEBASIS_WORDS_HPP_
#define FILEBASIS_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace filebasis {

  //! Alphabet of basic letters x_1, ..., x_n.
  struct Alphabet {
    int n = 1;

    [[nodiscard]] bool contains(int index) const noexcept {
      return index >= 1 && index <= n;
    }
  };

  //! A letter x_index^sign of the group alphabet.
  struct GroupLetter {
    int index = 1;
    int sign  = 1;

    [[nodiscard]] constexpr GroupLetter inverse() const noexcept {
      return {index, -sign};
    }

    //! Position in the order x_1 < x_1^-1 < x_2 < ... < x_n < x_n^-1.
    [[nodiscard]] constexpr int code() const noexcept {
      return 2 * (index - 1) + (sign < 0 ? 1 : 0);
    }

    [[nodiscard]] static constexpr GroupLetter from_code(int code) noexcept {
      return {code / 2 + 1, (code % 2) == 0 ? 1 : -1};
    }

    constexpr bool operator==(GroupLetter const&) const = default;
  };

  //! Signed-integer letter encoding used by the search engines: +i is x_i,
  //! -i is x_i^-1.
  using Letter  = std::int32_t;
  using Letters = std::vector<Letter>;

  //! A maximal run x_index^exponent; exponent is never zero.
  struct Run {
    int          index    = 1;
    std::int64_t exponent = 1;

    bool operator==(Run const&) const = default;
  };

  //! Freely reduced group word stored as maximal runs.
  //!
  //! Adjacent runs always carry distinct indices and no run has exponent zero,
  //! so every value of this type is freely reduced. The empty run list is the
  //! empty word.
  class PowerWord {
   public:
    PowerWord() = default;

    //! Builds the reduced word equal in the free group to the product of
    //! \p runs; zero exponents are dropped and equal neighbours merged.
    static PowerWord from_runs(std::span<Run const> runs);
    static PowerWord power(int index, std::int64_t exponent);
    static PowerWord from_letters(std::span<Letter const> letters);

    [[nodiscard]] std::vector<Run> const& runs() const noexcept {
      return runs_;
    }
    [[nodiscard]] bool empty() const noexcept {
      return runs_.empty();
    }
    [[nodiscard]] std::int64_t length() const noexcept {
      return length_;
    }
    [[nodiscard]] int max_index() const noexcept;

    [[nodiscard]] PowerWord inverse() const;

    //! Letter-by-letter expansion. Throws ArithmeticOverflow when the word is
    //! too long to materialise.
    [[nodiscard]] Letters letters() const;

    [[nodiscard]] GroupLetter first_letter() const;
    [[nodiscard]] GroupLetter last_letter() const;

    friend PowerWord operator*(PowerWord const& u, PowerWord const& v);
    PowerWord&       operator*=(PowerWord const& v);

    bool operator==(PowerWord const&) const = default;

   private:
    void push_back(Run run);

    std::vector<Run> runs_;
    std::int64_t     length_ = 0;
  };

  //! Free reduction of a raw letter sequence.
  //! Throws MalformedInput when a letter index lies outside 1..n.
  [[nodiscard]] PowerWord reduce(std::span<GroupLetter const> raw,
                                 Alphabet const&              alphabet);

  //! Free reduction on the signed encoding.
  [[nodiscard]] Letters free_reduce(std::span<Letter const> raw);

  struct CyclicReduction {
    PowerWord core;
    PowerWord conjugator;
  };

  //! Splits w = conjugator * core * conjugator^-1 with core cyclically reduced.
  [[nodiscard]] CyclicReduction cyclically_reduce(PowerWord const& w);
  [[nodiscard]] bool            is_cyclically_reduced(PowerWord const& w);

  //! w = x_1^{k_1} ... x_n^{k_n}: run indices strictly increase.
  [[nodiscard]] bool is_regular(PowerWord const& w) noexcept;
  [[nodiscard]] bool is_counter_regular(PowerWord const& w) noexcept;
  [[nodiscard]] bool is_letter_power(PowerWord const& w) noexcept;

  //! Length first, then left to right by GroupLetter::code.
  [[nodiscard]] std::strong_ordering deglex_compare(PowerWord const& u,
                                                    PowerWord const& v);

  struct DeglexLess {
    bool operator()(PowerWord const& u, PowerWord const& v) const {
      return deglex_compare(u, v) < 0;
    }
  };

  //! Least reduced word strictly greater than \p w.
  [[nodiscard]] PowerWord deglex_successor(PowerWord const& w,
                                           Alphabet const&  alphabet);

  //! x_i^s -> x_{n+1-i}^{-s}, letter by letter.
  [[nodiscard]] PowerWord relabel_mirror(PowerWord const& w,
                                         Alphabet const&  alphabet);

  //! Exponent sum of each basic letter; entry i-1 belongs to x_i.
  [[nodiscard]] std::vector<std::int64_t> abelian_image(PowerWord const& w,
                                                        int              n);

  //! Parses `x2 x1^-3`; the empty string is the empty word. The result is
  //! freely reduced. With \p alphabet set, indices outside 1..n are rejected.
  [[nodiscard]] PowerWord parse_word(std::string_view                text,
                                     std::optional<Alphabet> const& alphabet
                                     = std::nullopt);

  //! Inverse of parse_word on reduced words.
  [[nodiscard]] std::string to_string(PowerWord const& w);

  //! Overflow-checked 64-bit helpers.
  [[nodiscard]] std::int64_t checked_add(std::int64_t a, std::int64_t b);
  [[nodiscard]] std::int64_t checked_mul(std::int64_t a, std::int64_t b);

  //! Letters helpers shared by the search engines.
  [[nodiscard]] Letters inverse(std::span<Letter const> w);
  [[nodiscard]] Letters concat(std::span<Letter const> u,
                               std::span<Letter const> v);

  //! Offset k such that rotating \p w left by k gives its lexicographically
  //! least rotation (Booth's algorithm).
  [[nodiscard]] std::size_t least_rotation(std::span<Letter const> w);
  [[nodiscard]] Letters     rotate_left(std::span<Letter const> w,
                                        std::size_t             k);

  //! Smallest p > 0 with rotate_left(w, p) == w.
  [[nodiscard]] std::size_t rotation_period(std::span<Letter const> w);

  struct LettersHash {
    std::size_t operator()(Letters const& w) const noexcept;
  };

}  // namespace filebasis

template <>
struct std::hash<filebasis::PowerWord> {
  std::size_t operator()(filebasis::PowerWord const& w) const noexcept;
};

#endif  // FILEBASIS_WORDS_HPP_
