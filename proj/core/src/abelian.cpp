#include "filebasis/abelian.hpp"

#include <algorithm>

#include "filebasis/errors.hpp"

namespace filebasis {

  namespace {
    Integer abs_int(Integer const& x) {
      return x < 0 ? Integer(-x) : x;
    }

    // Floor division for Integer.
    Integer floor_div(Integer const& a, Integer const& b) {
      Integer q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }
  }  // namespace

  AbelianLattice::AbelianLattice(int n, std::span<PowerWord const> relators) : n_(n) {
    std::vector<std::vector<Integer>> m;
    for (PowerWord const& r : relators) {
      std::vector<Integer> row(static_cast<std::size_t>(n), 0);
      for (Run const& run : r.runs()) {
        if (run.index < 1 || run.index > n) {
          throw MalformedInput("relator uses letters outside the alphabet");
        }
        row[static_cast<std::size_t>(run.index - 1)] += run.exponent;
      }
      m.push_back(std::move(row));
    }
    std::size_t top = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(n) && top < m.size(); ++col) {
      // Euclid on column col among rows top..end.
      while (true) {
        std::size_t best = m.size();
        for (std::size_t r = top; r < m.size(); ++r) {
          if (m[r][col] != 0
              && (best == m.size() || abs_int(m[r][col]) < abs_int(m[best][col]))) {
            best = r;
          }
        }
        if (best == m.size()) {
          break;
        }
        std::swap(m[top], m[best]);
        bool others = false;
        for (std::size_t r = top + 1; r < m.size(); ++r) {
          if (m[r][col] == 0) {
            continue;
          }
          Integer const q = m[r][col] / m[top][col];
          for (std::size_t c = col; c < static_cast<std::size_t>(n); ++c) {
            m[r][c] -= q * m[top][c];
          }
          others = others || m[r][col] != 0;
        }
        if (!others) {
          if (m[top][col] < 0) {
            for (auto& x : m[top]) {
              x = -x;
            }
          }
          pivots_.push_back(col);
          ++top;
          break;
        }
      }
    }
    m.resize(top);
    rows_ = std::move(m);
  }

  bool AbelianLattice::contains(std::span<std::int64_t const> v) const {
    std::vector<Integer> rest(v.begin(), v.end());
    rest.resize(static_cast<std::size_t>(n_), 0);
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      std::size_t const p = pivots_[j];
      // Columns before p are final once row j is considered.
      for (std::size_t c = (j == 0 ? 0 : pivots_[j - 1] + 1); c < p; ++c) {
        if (rest[c] != 0) {
          return false;
        }
      }
      if (rest[p] % rows_[j][p] != 0) {
        return false;
      }
      Integer const q = rest[p] / rows_[j][p];
      for (std::size_t c = p; c < rest.size(); ++c) {
        rest[c] -= q * rows_[j][c];
      }
    }
    return std::all_of(rest.begin(), rest.end(), [](Integer const& x) { return x == 0; });
  }

  bool AbelianLattice::same_coset(PowerWord const& u, PowerWord const& v) const {
    auto a = abelian_image(u, n_);
    auto b = abelian_image(v, n_);
    for (std::size_t k = 0; k < a.size(); ++k) {
      a[k] = checked_add(a[k], -b[k]);
    }
    return contains(a);
  }

  bool AbelianLattice::for_each_coset_point(
      std::span<std::int64_t const>                                base,
      std::int64_t                                                 l1_bound,
      std::int64_t                                                 max_points,
      std::function<bool(std::vector<std::int64_t> const&)> const& visit) const {
    std::int64_t produced = 0;
    bool         stopped  = false;
    std::vector<Integer> start(base.begin(), base.end());
    start.resize(static_cast<std::size_t>(n_), 0);
    Integer const bound = l1_bound;

    std::function<void(std::size_t, std::vector<Integer> const&)> rec;
    rec = [&](std::size_t j, std::vector<Integer> const& cur) {
      if (stopped) {
        return;
      }
      std::size_t const limit = j < rows_.size() ? pivots_[j] : cur.size();
      Integer           fixed = 0;
      for (std::size_t c = 0; c < limit; ++c) {
        fixed += abs_int(cur[c]);
      }
      if (fixed > bound) {
        return;
      }
      if (j == rows_.size()) {
        std::vector<std::int64_t> out;
        out.reserve(cur.size());
        for (Integer const& x : cur) {
          if (abs_int(x) > Integer(std::numeric_limits<std::int64_t>::max())) {
            throw ArithmeticOverflow("lattice point leaves 64-bit range");
          }
          out.push_back(static_cast<std::int64_t>(x));
        }
        if (++produced > max_points || !visit(out)) {
          stopped = true;
        }
        return;
      }
      std::size_t const p     = pivots_[j];
      Integer const     h     = rows_[j][p];
      Integer const     slack = bound - fixed;
      // |cur[p] + k h| <= slack
      Integer const lo = -floor_div(slack + cur[p], h);
      Integer const hi = floor_div(slack - cur[p], h);
      for (Integer k = lo; k <= hi && !stopped; ++k) {
        std::vector<Integer> next = cur;
        for (std::size_t c = p; c < next.size(); ++c) {
          next[c] += k * rows_[j][c];
        }
        rec(j + 1, next);
      }
    };
    rec(0, start);
    return !stopped;
  }

  PowerWord regular_word(std::span<std::int64_t const> exponents) {
    std::vector<Run> runs;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      if (exponents[k] != 0) {
        runs.push_back({static_cast<int>(k + 1), exponents[k]});
      }
    }
    return PowerWord::from_runs(runs);
  }

}  // namespace filebasis
