#ifndef FILEBASIS_BUDGET_HPP_
#define FILEBASIS_BUDGET_HPP_

#include <cstdint>
#include <string_view>

namespace filebasis {

  //! Resource caps for every search. Exceeding any of them produces
  //! Verdict::budget_exceeded, never a yes/no guess.
  struct Budget {
    std::int64_t max_edges    = 64;       // diagram-size cap
    std::int64_t max_word_len = 64;       // rewriting / peeling frontier cap
    std::int64_t max_states   = 200'000;  // visited-state cap per search

    [[nodiscard]] bool valid() const noexcept {
      return max_edges > 0 && max_word_len > 0 && max_states > 0;
    }
  };

  enum class Verdict { yes, no, budget_exceeded };

  [[nodiscard]] constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::yes:
        return "yes";
      case Verdict::no:
        return "no";
      case Verdict::budget_exceeded:
        return "budget-exceeded";
    }
    return "budget-exceeded";
  }

}  // namespace filebasis

#endif  // FILEBASIS_BUDGET_HPP_
