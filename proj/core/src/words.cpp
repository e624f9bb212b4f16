#include "filebasis/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "filebasis/errors.hpp"

namespace filebasis {

  std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t result;
    if (__builtin_add_overflow(a, b, &result)) {
      throw ArithmeticOverflow("64-bit overflow in word arithmetic");
    }
    return result;
  }

  std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t result;
    if (__builtin_mul_overflow(a, b, &result)) {
      throw ArithmeticOverflow("64-bit overflow in word arithmetic");
    }
    return result;
  }

  namespace {
    std::int64_t magnitude(std::int64_t e) {
      if (e == std::numeric_limits<std::int64_t>::min()) {
        throw ArithmeticOverflow("exponent magnitude overflows");
      }
      return e < 0 ? -e : e;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PowerWord
  ////////////////////////////////////////////////////////////////////////

  void PowerWord::push_back(Run run) {
    if (run.exponent == 0) {
      return;
    }
    if (!runs_.empty() && runs_.back().index == run.index) {
      Run& last = runs_.back();
      length_   = checked_add(length_, -magnitude(last.exponent));
      last.exponent = checked_add(last.exponent, run.exponent);
      if (last.exponent == 0) {
        runs_.pop_back();
      } else {
        length_ = checked_add(length_, magnitude(last.exponent));
      }
      return;
    }
    runs_.push_back(run);
    length_ = checked_add(length_, magnitude(run.exponent));
  }

  PowerWord PowerWord::from_runs(std::span<Run const> runs) {
    PowerWord w;
    for (Run const& r : runs) {
      w.push_back(r);
    }
    return w;
  }

  PowerWord PowerWord::power(int index, std::int64_t exponent) {
    PowerWord w;
    w.push_back({index, exponent});
    return w;
  }

  PowerWord PowerWord::from_letters(std::span<Letter const> letters) {
    PowerWord w;
    for (Letter a : letters) {
      w.push_back({a < 0 ? -a : a, a < 0 ? -1 : 1});
    }
    return w;
  }

  int PowerWord::max_index() const noexcept {
    int m = 0;
    for (Run const& r : runs_) {
      m = std::max(m, r.index);
    }
    return m;
  }

  PowerWord PowerWord::inverse() const {
    PowerWord w;
    w.runs_.reserve(runs_.size());
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
      w.runs_.push_back({it->index, -it->exponent});
    }
    w.length_ = length_;
    return w;
  }

  Letters PowerWord::letters() const {
    if (length_ > (std::int64_t{1} << 31)) {
      throw ArithmeticOverflow("word too long to expand letter by letter");
    }
    Letters out;
    out.reserve(static_cast<std::size_t>(length_));
    for (Run const& r : runs_) {
      Letter const a = r.exponent > 0 ? r.index : -r.index;
      out.insert(out.end(), static_cast<std::size_t>(magnitude(r.exponent)), a);
    }
    return out;
  }

  GroupLetter PowerWord::first_letter() const {
    if (runs_.empty()) {
      throw PreconditionViolation("empty word has no first letter");
    }
    return {runs_.front().index, runs_.front().exponent > 0 ? 1 : -1};
  }

  GroupLetter PowerWord::last_letter() const {
    if (runs_.empty()) {
      throw PreconditionViolation("empty word has no last letter");
    }
    return {runs_.back().index, runs_.back().exponent > 0 ? 1 : -1};
  }

  PowerWord& PowerWord::operator*=(PowerWord const& v) {
    for (Run const& r : v.runs_) {
      push_back(r);
    }
    return *this;
  }

  PowerWord operator*(PowerWord const& u, PowerWord const& v) {
    PowerWord w = u;
    w *= v;
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  PowerWord reduce(std::span<GroupLetter const> raw, Alphabet const& alphabet) {
    std::vector<Run> runs;
    runs.reserve(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
      GroupLetter const& a = raw[k];
      if (!alphabet.contains(a.index) || (a.sign != 1 && a.sign != -1)) {
        throw MalformedInput("letter " + std::to_string(k) + " (x"
                             + std::to_string(a.index) + ") is outside x1..x"
                             + std::to_string(alphabet.n));
      }
      runs.push_back({a.index, a.sign});
    }
    return PowerWord::from_runs(runs);
  }

  Letters free_reduce(std::span<Letter const> raw) {
    Letters out;
    out.reserve(raw.size());
    for (Letter a : raw) {
      if (!out.empty() && out.back() == -a) {
        out.pop_back();
      } else {
        out.push_back(a);
      }
    }
    return out;
  }

  CyclicReduction cyclically_reduce(PowerWord const& w) {
    std::vector<Run> runs = w.runs();
    std::vector<Run> conj;
    std::size_t      lo = 0, hi = runs.size();
    // Invariant: runs[lo..hi) is freely reduced and w = conj * runs[lo..hi) * conj^-1.
    while (hi - lo >= 2 && runs[lo].index == runs[hi - 1].index
           && ((runs[lo].exponent > 0) != (runs[hi - 1].exponent > 0))) {
      Run&               first = runs[lo];
      Run&               last  = runs[hi - 1];
      std::int64_t const cut
          = std::min(magnitude(first.exponent), magnitude(last.exponent));
      std::int64_t const s = first.exponent > 0 ? 1 : -1;
      conj.push_back({first.index, s * cut});
      first.exponent -= s * cut;
      last.exponent += s * cut;
      if (first.exponent == 0) {
        ++lo;
      }
      if (hi > lo && last.exponent == 0) {
        --hi;
      }
    }
    CyclicReduction result;
    result.conjugator = PowerWord::from_runs(conj);
    result.core       = PowerWord::from_runs(
        std::span<Run const>(runs.data() + lo, hi - lo));
    return result;
  }

  bool is_cyclically_reduced(PowerWord const& w) {
    auto const& r = w.runs();
    if (r.size() < 2) {
      return true;
    }
    return !(r.front().index == r.back().index
             && ((r.front().exponent > 0) != (r.back().exponent > 0)));
  }

  bool is_regular(PowerWord const& w) noexcept {
    auto const& r = w.runs();
    for (std::size_t k = 1; k < r.size(); ++k) {
      if (r[k].index <= r[k - 1].index) {
        return false;
      }
    }
    return true;
  }

  bool is_counter_regular(PowerWord const& w) noexcept {
    auto const& r = w.runs();
    for (std::size_t k = 1; k < r.size(); ++k) {
      if (r[k].index >= r[k - 1].index) {
        return false;
      }
    }
    return true;
  }

  bool is_letter_power(PowerWord const& w) noexcept {
    return w.runs().size() == 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Deg-lex
  ////////////////////////////////////////////////////////////////////////

  std::strong_ordering deglex_compare(PowerWord const& u, PowerWord const& v) {
    if (auto c = u.length() <=> v.length(); c != 0) {
      return c;
    }
    auto const&  ru = u.runs();
    auto const&  rv = v.runs();
    std::size_t  i = 0, j = 0;
    std::int64_t left_u = 0, left_v = 0;
    while (i < ru.size() && j < rv.size()) {
      if (left_u == 0) {
        left_u = magnitude(ru[i].exponent);
      }
      if (left_v == 0) {
        left_v = magnitude(rv[j].exponent);
      }
      GroupLetter const a{ru[i].index, ru[i].exponent > 0 ? 1 : -1};
      GroupLetter const b{rv[j].index, rv[j].exponent > 0 ? 1 : -1};
      if (auto c = a.code() <=> b.code(); c != 0) {
        return c;
      }
      std::int64_t const step = std::min(left_u, left_v);
      left_u -= step;
      left_v -= step;
      if (left_u == 0) {
        ++i;
      }
      if (left_v == 0) {
        ++j;
      }
    }
    return std::strong_ordering::equal;
  }

  PowerWord deglex_successor(PowerWord const& w, Alphabet const& alphabet) {
    int const top = 2 * alphabet.n - 1;
    if (w.max_index() > alphabet.n) {
      throw MalformedInput("word uses letters outside the alphabet");
    }
    std::vector<int> codes;
    for (Letter a : w.letters()) {
      codes.push_back(GroupLetter{a < 0 ? -a : a, a < 0 ? -1 : 1}.code());
    }
    auto least_after = [](int prev) { return prev == 1 ? 1 : 0; };
    for (std::size_t k = codes.size(); k-- > 0;) {
      int const forbidden = k > 0 ? (codes[k - 1] ^ 1) : -1;
      int       c         = codes[k] + 1;
      if (c == forbidden) {
        ++c;
      }
      if (c <= top) {
        codes[k] = c;
        for (std::size_t t = k + 1; t < codes.size(); ++t) {
          codes[t] = least_after(codes[t - 1]);
        }
        Letters out;
        for (int code : codes) {
          GroupLetter const g = GroupLetter::from_code(code);
          out.push_back(g.sign * g.index);
        }
        return PowerWord::from_letters(out);
      }
    }
    return PowerWord::power(1, static_cast<std::int64_t>(codes.size()) + 1);
  }

  PowerWord relabel_mirror(PowerWord const& w, Alphabet const& alphabet) {
    std::vector<Run> runs;
    runs.reserve(w.runs().size());
    for (Run const& r : w.runs()) {
      if (!alphabet.contains(r.index)) {
        throw MalformedInput("word uses letters outside the alphabet");
      }
      runs.push_back({alphabet.n + 1 - r.index, -r.exponent});
    }
    return PowerWord::from_runs(runs);
  }

  std::vector<std::int64_t> abelian_image(PowerWord const& w, int n) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    for (Run const& r : w.runs()) {
      if (r.index < 1 || r.index > n) {
        throw MalformedInput("word uses letters outside the alphabet");
      }
      auto& slot = v[static_cast<std::size_t>(r.index - 1)];
      slot       = checked_add(slot, r.exponent);
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text grammar
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Int>
    bool parse_int(std::string_view s, Int& out) {
      if (s.empty()) {
        return false;
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size();
    }
  }  // namespace

  PowerWord parse_word(std::string_view text, std::optional<Alphabet> const& alphabet) {
    std::vector<Run> runs;
    std::size_t      pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      std::string_view const token = text.substr(pos, end - pos);
      pos                          = end;
      auto bad = [&](char const* why) {
        return MalformedInput("bad token '" + std::string(token) + "': " + why);
      };
      if (token.size() < 2 || token[0] != 'x') {
        throw bad("expected x<index> or x<index>^<exponent>");
      }
      std::size_t const  caret = token.find('^');
      std::string_view   idx   = token.substr(1, caret == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : caret - 1);
      int          index    = 0;
      std::int64_t exponent = 1;
      if (!parse_int(idx, index) || idx.front() == '+' || index < 1) {
        throw bad("index must be a positive integer");
      }
      if (caret != std::string_view::npos) {
        std::string_view e = token.substr(caret + 1);
        if (!parse_int(e, exponent)) {
          throw bad("exponent must be an integer");
        }
      }
      if (alphabet && !alphabet->contains(index)) {
        throw bad("index outside the alphabet");
      }
      runs.push_back({index, exponent});
    }
    return PowerWord::from_runs(runs);
  }

  std::string to_string(PowerWord const& w) {
    std::string out;
    for (Run const& r : w.runs()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += 'x';
      out += std::to_string(r.index);
      if (r.exponent != 1) {
        out += '^';
        out += std::to_string(r.exponent);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Letters helpers
  ////////////////////////////////////////////////////////////////////////

  Letters inverse(std::span<Letter const> w) {
    Letters out(w.rbegin(), w.rend());
    for (Letter& a : out) {
      a = -a;
    }
    return out;
  }

  Letters concat(std::span<Letter const> u, std::span<Letter const> v) {
    Letters out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  std::size_t least_rotation(std::span<Letter const> w) {
    std::size_t const n = w.size();
    if (n == 0) {
      return 0;
    }
    // Booth's algorithm on the doubled string.
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t                 k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
      Letter const   sj = w[j % n];
      std::ptrdiff_t i  = f[j - k - 1];
      while (i != -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
        if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) {
          k = j - static_cast<std::size_t>(i) - 1;
        }
        i = f[static_cast<std::size_t>(i)];
      }
      if (i == -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
        if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) {
          k = j;
        }
        f[j - k] = -1;
      } else {
        f[j - k] = i + 1;
      }
    }
    return k % n;
  }

  Letters rotate_left(std::span<Letter const> w, std::size_t k) {
    Letters out;
    out.reserve(w.size());
    if (w.empty()) {
      return out;
    }
    k %= w.size();
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }

  std::size_t rotation_period(std::span<Letter const> w) {
    std::size_t const n = w.size();
    if (n == 0) {
      return 1;
    }
    std::vector<std::size_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t k = pi[i - 1];
      while (k > 0 && w[i] != w[k]) {
        k = pi[k - 1];
      }
      if (w[i] == w[k]) {
        ++k;
      }
      pi[i] = k;
    }
    std::size_t const p = n - pi[n - 1];
    return n % p == 0 ? p : n;
  }

  std::size_t LettersHash::operator()(Letters const& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(a));
      h *= 1099511628211ull;
    }
    return h;
  }

}  // namespace filebasis

std::size_t std::hash<filebasis::PowerWord>::operator()(
    filebasis::PowerWord const& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto const& r : w.runs()) {
    h ^= static_cast<std::size_t>(r.index) * 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
    h ^= static_cast<std::size_t>(r.exponent);
    h *= 1099511628211ull;
  }
  return h;
}
