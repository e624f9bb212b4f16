#include "filebasis/construction.hpp"

#include <algorithm>

#include "filebasis/abelian.hpp"
#include "filebasis/decision.hpp"
#include "filebasis/errors.hpp"

namespace filebasis {

  Rational ConstructionParams::lambda2() const {
    return Rational(2, n);
  }

  Rational ConstructionParams::mu() const {
    return lambda1 + 5 * lambda2();
  }

  std::optional<Rational> ConstructionParams::q() const {
    if (q_override) {
      return q_override;
    }
    Rational const gap = 1 - 2 * mu();
    if (gap <= 0) {
      return std::nullopt;
    }
    return least_rational_at_least(1 / gap, 1'000'000);
  }

  bool ConstructionParams::q_admissible() const {
    Rational const gap = 1 - 2 * mu();
    auto const     qq  = q();
    return gap > 0 && qq && *qq >= 1 / gap;
  }

  namespace {
    InequalityCheck make_check(std::string name,
                               Rational    lhs,
                               std::string relation,
                               Rational    rhs,
                               bool        required = true) {
      InequalityCheck c;
      c.name     = std::move(name);
      c.relation = std::move(relation);
      c.lhs      = std::move(lhs);
      c.rhs      = std::move(rhs);
      c.required = required;
      if (c.relation == "<=") {
        c.holds = c.lhs <= c.rhs;
      } else if (c.relation == "<") {
        c.holds = c.lhs < c.rhs;
      } else if (c.relation == ">=") {
        c.holds = c.lhs >= c.rhs;
      } else if (c.relation == ">") {
        c.holds = c.lhs > c.rhs;
      } else if (c.relation == "==") {
        c.holds = c.lhs == c.rhs;
      } else {
        throw PreconditionViolation("unknown relation " + c.relation);
      }
      return c;
    }

    InequalityCheck make_flag(std::string name, bool holds) {
      return make_check(std::move(name), holds ? 1 : 0, "==", 1);
    }
  }  // namespace

  bool ParamsReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](InequalityCheck const& c) {
      return c.holds || !c.required;
    });
  }

  InequalityCheck const& ParamsReport::find(std::string_view name) const {
    for (InequalityCheck const& c : checks) {
      if (c.name == name) {
        return c;
      }
    }
    throw PreconditionViolation("no check named " + std::string(name));
  }

  ParamsReport validate_params(ConstructionParams const& p) {
    if (p.n < 1) {
      throw MalformedParams("n must be positive");
    }
    if (p.N < 1) {
      throw MalformedParams("N must be positive");
    }
    if (p.lambda1 <= 0 || p.lambda1 >= 1) {
      throw MalformedParams("lambda1 must lie in (0, 1)");
    }
    Rational const  l1 = p.lambda1;
    Rational const  n  = p.n;
    Rational const  mu = p.mu();
    ParamsReport    report;
    report.checks.push_back(
        make_check("lambda1-bound", (4 + 2 * n * l1 / (1 - l1)) * l1, "<=", 1 / n));
    report.checks.push_back(make_check("lambda1*n*N>=1", l1 * n * Rational(p.N), ">=", 1));
    report.checks.push_back(make_check("2lambda1+13lambda2<1", 2 * l1 + 13 * p.lambda2(), "<", 1));
    report.checks.push_back(make_check("mu<1/2", mu, "<", Rational(1, 2)));
    InequalityCheck five_two = make_check(
        "scale-margin", 1 - 2 * mu - 2 * l1 - 2 * n * l1 * l1 / (1 - l1), ">=", 1 - 21 / n, false);
    report.theorem_scale = p.n >= 63 && five_two.holds;
    report.checks.push_back(std::move(five_two));
    return report;
  }

  PowerWord regular_block(int n, std::int64_t m) {
    std::vector<Run> runs;
    if (m != 0) {
      for (int k = 1; k <= n; ++k) {
        runs.push_back({k, m});
      }
    }
    return PowerWord::from_runs(runs);
  }

  bool admissible_shape(PowerWord const& w, int n) {
    if (w.empty()) {
      return false;
    }
    return w.first_letter().index != 1 && w.last_letter().index != n;
  }

  std::vector<InequalityCheck> check_relator(ConstructionParams const& p,
                                             Relator const&            rel) {
    std::vector<InequalityCheck> checks;
    std::int64_t const           wl = rel.w.length();
    bool const in_alphabet = rel.w.max_index() <= p.n && rel.r.max_index() <= p.n;
    checks.push_back(make_flag("alphabet", in_alphabet));
    checks.push_back(make_check("m=N|w|+i", rel.m, "==",
                                Rational(p.N) * wl + rel.i));
    checks.push_back(make_flag("r=block*w^-1", rel.r == regular_block(p.n, rel.m) * rel.w.inverse()));
    checks.push_back(make_check("|r|=nm+|w|", rel.r.length(), "==",
                                Rational(p.n) * rel.m + wl));
    checks.push_back(make_flag("w-shape", admissible_shape(rel.w, p.n) && !is_regular(rel.w)));
    checks.push_back(make_flag("cyclically-reduced", is_cyclically_reduced(rel.r)));
    checks.push_back(make_check("lambda1|r|>=|w|", p.lambda1 * (Rational(p.n) * rel.m + wl), ">=", wl));
    return checks;
  }

  std::int64_t Presentation::max_relator_length() const {
    std::int64_t L = 0;
    for (Relator const& r : relators) {
      L = std::max(L, r.r.length());
    }
    return L;
  }

  std::vector<PowerWord> Presentation::relator_words() const {
    std::vector<PowerWord> out;
    out.reserve(relators.size());
    for (Relator const& r : relators) {
      out.push_back(r.r);
    }
    return out;
  }

  std::vector<InequalityCheck> validate_presentation(Presentation const& pres) {
    std::vector<InequalityCheck> checks;
    for (Relator const& rel : pres.relators) {
      for (InequalityCheck c : check_relator(pres.params, rel)) {
        c.name += " [i=" + std::to_string(rel.i) + "]";
        checks.push_back(std::move(c));
      }
    }
    std::vector<std::int64_t> ms;
    for (Relator const& rel : pres.relators) {
      ms.push_back(rel.m);
    }
    std::sort(ms.begin(), ms.end());
    bool const distinct = std::adjacent_find(ms.begin(), ms.end()) == ms.end();
    checks.push_back(make_flag("m-increasing", distinct));
    bool nondecreasing = true;
    for (std::size_t k = 1; k < pres.relators.size(); ++k) {
      if (pres.relators[k].r.length() < pres.relators[k - 1].r.length()) {
        nondecreasing = false;
      }
    }
    checks.push_back(make_flag("|r|-nondecreasing", nondecreasing));
    return checks;
  }

  Relator build_relator(ConstructionParams const& p,
                        std::int64_t              i,
                        PowerWord const&          w,
                        LengthBoundPolicy         policy) {
    if (i < 1) {
      throw ConstructionError("relator index must be positive");
    }
    if (w.max_index() > p.n) {
      throw ConstructionError("w uses a letter outside the alphabet");
    }
    Relator rel;
    rel.i = i;
    rel.w = w;
    rel.m = checked_add(checked_mul(p.N, w.length()), i);
    (void)checked_add(checked_mul(p.n, rel.m), w.length());
    rel.r = regular_block(p.n, rel.m) * w.inverse();

    bool const length_bound_forced
        = policy == LengthBoundPolicy::enforce
          || (policy == LengthBoundPolicy::automatic
              && p.lambda1 * p.n * Rational(p.N) >= 1);
    for (InequalityCheck const& c : check_relator(p, rel)) {
      if (c.holds) {
        continue;
      }
      if (c.name == "lambda1|r|>=|w|" && !length_bound_forced) {
        continue;
      }
      throw ConstructionError("relator " + std::to_string(i) + " violates " + c.name + ": "
                              + to_string(c.lhs) + " " + c.relation + " " + to_string(c.rhs)
                              + " is false");
    }
    return rel;
  }

  NextWordResult next_w(ConstructionParams const&   p,
                        std::vector<Relator> const& rel,
                        Budget const&               budget) {
    NextWordResult result;
    std::vector<PowerWord> S;
    std::int64_t           L = 0;
    for (Relator const& r : rel) {
      S.push_back(r.r);
      L = std::max(L, r.r.length());
    }
    std::optional<Rational> q = p.q();
    if (!q) {
      if (!S.empty()) {
        result.reason = "no admissible q for these parameters; supply an override";
        return result;
      }
      q = Rational(1);  // irrelevant: with no relators the edge bound ignores q
    }
    AbelianLattice const lattice(p.n, S);
    std::int64_t const   n4 = checked_mul(checked_mul(p.n, p.n), checked_mul(p.n, p.n));
    Alphabet const       alphabet = p.alphabet();

    PowerWord w;
    while (true) {
      w = deglex_successor(w, alphabet);
      if (!admissible_shape(w, p.n) || is_regular(w)) {
        continue;
      }
      if (++result.candidates_examined > budget.max_states) {
        result.reason = "candidate cap reached";
        return result;
      }
      std::int64_t const bound
          = checked_add(checked_mul(p.n + 1, w.length()), checked_mul(n4, L));
      std::vector<PowerWord> us;
      bool const complete = lattice.for_each_coset_point(
          abelian_image(w, p.n), bound, budget.max_states,
          [&](std::vector<std::int64_t> const& e) {
            us.push_back(regular_word(e));
            return true;
          });
      if (!complete) {
        result.reason = "regular candidates for " + to_string(w) + " exceed the state cap";
        return result;
      }
      std::sort(us.begin(), us.end(), DeglexLess{});
      bool rejected  = false;
      bool undecided = false;
      for (PowerWord const& u : us) {
        ++result.regular_words_tested;
        Outcome const o = in_D(S, *q, u, w, budget);
        if (o.value == Verdict::yes) {
          rejected = true;
          break;
        }
        if (o.value == Verdict::budget_exceeded) {
          undecided = true;
        }
      }
      if (rejected) {
        continue;
      }
      if (undecided) {
        result.reason = "D test for " + to_string(w) + " exceeded the budget";
        return result;
      }
      result.found = true;
      result.w     = w;
      return result;
    }
  }

  GenerateResult generate(ConstructionParams const& p,
                          std::int64_t              count,
                          Budget const&             budget,
                          LengthBoundPolicy         policy) {
    GenerateResult out;
    out.presentation.params = p;
    for (std::int64_t i = 1; i <= count; ++i) {
      NextWordResult const nw = next_w(p, out.presentation.relators, budget);
      if (!nw.found) {
        out.truncated = true;
        out.reason    = "step " + std::to_string(i) + ": " + nw.reason;
        break;
      }
      Relator rel = build_relator(p, i, nw.w, policy);
      for (InequalityCheck const& c : check_relator(p, rel)) {
        if (!c.holds) {
          out.warnings.push_back("relator " + std::to_string(i) + " fails " + c.name + ": "
                                 + to_string(c.lhs) + " " + c.relation + " "
                                 + to_string(c.rhs));
        }
      }
      out.presentation.relators.push_back(std::move(rel));
    }
    return out;
  }

}  // namespace filebasis
