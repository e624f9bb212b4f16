#include "filebasis/decision.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "filebasis/abelian.hpp"
#include "filebasis/errors.hpp"

namespace filebasis {

  std::string_view to_string(Engine e) noexcept {
    switch (e) {
      case Engine::diagram:
        return "diagram";
      case Engine::rewrite:
        return "rewrite";
      case Engine::both:
        return "both";
    }
    return "both";
  }

  std::string_view to_string(Witness::Kind k) noexcept {
    switch (k) {
      case Witness::Kind::none:
        return "none";
      case Witness::Kind::free_reduction:
        return "free-reduction";
      case Witness::Kind::conjugate_product:
        return "conjugate-product";
      case Witness::Kind::rewrite_trace:
        return "rewrite-trace";
      case Witness::Kind::abelian_obstruction:
        return "abelian-obstruction";
      case Witness::Kind::exhaustive_search:
        return "exhaustive-search";
    }
    return "none";
  }

  namespace {
    std::int64_t max_length(std::span<PowerWord const> S) {
      std::int64_t L = 0;
      for (PowerWord const& s : S) {
        L = std::max(L, s.length());
      }
      return L;
    }

    std::int64_t to_int64_saturated(Integer const& x) {
      if (x > Integer(std::numeric_limits<std::int64_t>::max())) {
        return std::numeric_limits<std::int64_t>::max();
      }
      if (x < 0) {
        return -1;
      }
      return static_cast<std::int64_t>(x);
    }

    Outcome budget(std::string note) {
      Outcome o;
      o.value = Verdict::budget_exceeded;
      o.note  = std::move(note);
      return o;
    }

    int alphabet_size(Presentation const& p, PowerWord const& u, PowerWord const& v) {
      return std::max({p.params.n, u.max_index(), v.max_index(), 1});
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // C and D
  ////////////////////////////////////////////////////////////////////////

  Outcome in_C(std::span<PowerWord const> S,
               Rational const&            E,
               PowerWord const&           u,
               PowerWord const&           v,
               Budget const&              budget_caps) {
    std::int64_t const contour = checked_add(u.length(), v.length());
    std::int64_t const by_E    = to_int64_saturated(floor(E));
    std::int64_t const edges   = std::min(by_E, budget_caps.max_edges);
    bool const         capped  = edges < by_E;

    Outcome out;
    out.witness.engine = "diagram";
    if (edges < 0 || 2 * edges < contour) {
      // Every diagram with this contour has at least |u v^-1| / 2 edges.
      if (capped) {
        return budget("edge cap below the contour length");
      }
      out.value         = Verdict::no;
      out.witness.kind  = Witness::Kind::exhaustive_search;
      out.note          = "contour longer than twice the edge bound";
      return out;
    }
    Letters const start = free_reduce((u * v.inverse()).letters());
    if (start.empty()) {
      out.value                 = Verdict::yes;
      out.witness.kind          = Witness::Kind::conjugate_product;
      out.witness.diagram_edges = contour / 2;
      return out;
    }
    if (S.empty()) {
      out.value        = Verdict::no;
      out.witness.kind = Witness::Kind::free_reduction;
      out.note         = "distinct reduced words and no relators";
      return out;
    }
    FaceLibrary const   faces(S);
    std::int64_t const  perimeter = 2 * edges - contour;
    PeelingSearch       search(faces, budget_caps, perimeter, true);
    SearchStatus const  status = search.run(start, [&](std::int64_t id) {
      return search.node(id).word.empty();
    });
    out.witness.states = static_cast<std::int64_t>(search.states());
    switch (status) {
      case SearchStatus::found: {
        PeelReplay const replay
            = replay_peeling(faces, start, search.path_to(search.goal()));
        out.value                 = Verdict::yes;
        out.witness.kind          = Witness::Kind::conjugate_product;
        out.witness.product       = replay.product;
        out.witness.diagram_edges = (search.node(search.goal()).cost + contour) / 2;
        return out;
      }
      case SearchStatus::exhausted:
        if (capped) {
          return budget("no diagram within the edge cap; cap below E");
        }
        out.value        = Verdict::no;
        out.witness.kind = Witness::Kind::exhaustive_search;
        out.note         = "no disc diagram within the edge bound";
        return out;
      case SearchStatus::truncated:
        break;
    }
    Outcome o = budget("diagram search hit the state or word-length cap");
    o.witness.states = out.witness.states;
    o.witness.engine = "diagram";
    return o;
  }

  Rational d_edge_bound(std::span<PowerWord const> S,
                        Rational const&            q,
                        PowerWord const&           u,
                        PowerWord const&           v) {
    Rational const L = max_length(S);
    return (1 + q * L) / 2 * Rational(checked_add(u.length(), v.length()));
  }

  Outcome in_D(std::span<PowerWord const> S,
               Rational const&            q,
               PowerWord const&           u,
               PowerWord const&           v,
               Budget const&              budget_caps) {
    return in_C(S, d_edge_bound(S, q, u, v), u, v, budget_caps);
  }

  bool completeness_contract(Presentation const& p) {
    ParamsReport const report = validate_params(p.params);
    for (char const* name : {"lambda1-bound", "2lambda1+13lambda2<1", "mu<1/2"}) {
      if (!report.find(name).holds) {
        return false;
      }
    }
    if (!p.params.q_admissible()) {
      return false;
    }
    for (InequalityCheck const& c : validate_presentation(p)) {
      if (!c.holds) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  Outcome rewrite_search(std::span<PowerWord const> S,
                         PowerWord const&           u,
                         PowerWord const&           v,
                         Budget const&              caps) {
    Outcome out;
    out.witness.engine = "rewrite";
    Letters const a = u.letters();
    Letters const b = v.letters();
    if (a == b) {
      out.value        = Verdict::yes;
      out.witness.kind = Witness::Kind::rewrite_trace;
      out.witness.trace = {u};
      return out;
    }
    if (S.empty()) {
      return budget("no relators to rewrite with");
    }
    FaceLibrary const faces(S);

    using Parents = std::unordered_map<Letters, Letters, LettersHash>;
    Parents              from_u, from_v;
    std::deque<Letters>  frontier_u{a}, frontier_v{b};
    from_u.emplace(a, Letters{});
    from_v.emplace(b, Letters{});
    bool truncated = false;

    auto neighbours = [&](Letters const& x, auto&& emit) {
      for (std::size_t p = 0; p <= x.size(); ++p) {
        for (std::uint32_t k = 0; k < faces.size(); ++k) {
          for (int sign : {1, -1}) {
            Letters const& rho = faces.word(k, sign);
            std::size_t const len = rho.size();
            for (std::size_t t = 0; t < len; ++t) {
              // Replace x[p, p+m) == rho_t[0, m) with (rho_t[m, len))^-1.
              for (std::size_t m = 0; m <= len && p + m <= x.size(); ++m) {
                if (m > 0 && x[p + m - 1] != rho[(t + m - 1) % len]) {
                  break;
                }
                if (x.size() - m + (len - m) > static_cast<std::size_t>(caps.max_word_len) + len) {
                  continue;  // cannot reduce back under the cap
                }
                Letters y(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p));
                for (std::size_t r = len; r-- > m;) {
                  y.push_back(-rho[(t + r) % len]);
                }
                y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(p + m), x.end());
                y = free_reduce(y);
                if (static_cast<std::int64_t>(y.size()) > caps.max_word_len) {
                  truncated = true;
                  continue;
                }
                if (!emit(std::move(y))) {
                  return false;
                }
              }
            }
          }
        }
      }
      return true;
    };

    std::optional<Letters> meet;
    auto expand = [&](std::deque<Letters>& frontier, Parents& mine, Parents const& other) {
      std::deque<Letters> next;
      for (Letters const& x : frontier) {
        bool const go_on = neighbours(x, [&](Letters y) {
          if (mine.contains(y)) {
            return true;
          }
          if (static_cast<std::int64_t>(from_u.size() + from_v.size()) >= caps.max_states) {
            truncated = true;
            return false;
          }
          mine.emplace(y, x);
          if (other.contains(y)) {
            meet = y;
            return false;
          }
          next.push_back(std::move(y));
          return true;
        });
        if (!go_on) {
          break;
        }
      }
      frontier = std::move(next);
    };

    while (!meet && !(frontier_u.empty() && frontier_v.empty())) {
      bool const pick_u = !frontier_u.empty()
                          && (frontier_v.empty() || frontier_u.size() <= frontier_v.size());
      if (pick_u) {
        expand(frontier_u, from_u, from_v);
      } else {
        expand(frontier_v, from_v, from_u);
      }
      if (!meet && static_cast<std::int64_t>(from_u.size() + from_v.size()) >= caps.max_states) {
        truncated = true;
        break;
      }
    }
    out.witness.states = static_cast<std::int64_t>(from_u.size() + from_v.size());
    if (!meet) {
      Outcome o = budget(truncated ? "rewriting search hit its caps"
                                   : "rewriting closure exhausted under the length cap");
      o.witness.engine = "rewrite";
      o.witness.states = out.witness.states;
      return o;
    }
    std::vector<Letters> left;
    for (Letters x = *meet; !x.empty() || from_u.contains(x);) {
      left.push_back(x);
      Letters const& parent = from_u.at(x);
      if (x == a) {
        break;
      }
      x = parent;
    }
    std::reverse(left.begin(), left.end());
    std::vector<Letters> right;
    for (Letters x = *meet; x != b;) {
      x = from_v.at(x);
      right.push_back(x);
    }
    out.value        = Verdict::yes;
    out.witness.kind = Witness::Kind::rewrite_trace;
    for (Letters const& x : left) {
      out.witness.trace.push_back(PowerWord::from_letters(x));
    }
    for (Letters const& x : right) {
      out.witness.trace.push_back(PowerWord::from_letters(x));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equality
  ////////////////////////////////////////////////////////////////////////

  Outcome equals_in_G(Presentation const& p,
                      PowerWord const&    u,
                      PowerWord const&    v,
                      Budget const&       caps,
                      Engine              engine) {
    Outcome out;
    if (u == v) {
      out.value          = Verdict::yes;
      out.witness.kind   = Witness::Kind::free_reduction;
      out.witness.engine = "free";
      return out;
    }
    std::vector<PowerWord> const S = p.relator_words();
    int const                    n = alphabet_size(p, u, v);
    AbelianLattice const         lattice(n, S);
    if (!lattice.same_coset(u, v)) {
      auto a = abelian_image(u, n);
      auto b = abelian_image(v, n);
      for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = checked_add(a[k], -b[k]);
      }
      out.value                      = Verdict::no;
      out.witness.kind               = Witness::Kind::abelian_obstruction;
      out.witness.engine             = "abelian";
      out.witness.abelian_difference = std::move(a);
      return out;
    }
    if (S.empty()) {
      out.value          = Verdict::no;
      out.witness.kind   = Witness::Kind::free_reduction;
      out.witness.engine = "free";
      out.note           = "distinct reduced words in a free group";
      return out;
    }

    std::optional<Outcome> by_diagram, by_rewrite;
    if (engine != Engine::rewrite) {
      auto const q = p.params.q();
      Rational const E = q ? d_edge_bound(S, *q, u, v) : Rational(caps.max_edges);
      Outcome o = in_C(S, E, u, v, caps);
      if (o.value == Verdict::no
          && (!q || o.witness.kind != Witness::Kind::exhaustive_search
              || !completeness_contract(p))) {
        std::int64_t const states = o.witness.states;
        o = budget(q ? "no diagram within the D bound, but the isoperimetric "
                       "guarantee does not apply to these parameters"
                     : "no admissible q; search bounded by max_edges only");
        o.witness.engine = "diagram";
        o.witness.states = states;
      }
      by_diagram = std::move(o);
    }
    if (engine != Engine::diagram) {
      by_rewrite = rewrite_search(S, u, v, caps);
    }
    if (by_diagram && by_rewrite) {
      bool const conflict
          = (by_diagram->value == Verdict::yes && by_rewrite->value == Verdict::no)
            || (by_diagram->value == Verdict::no && by_rewrite->value == Verdict::yes);
      if (conflict) {
        throw ConstructionError("engines disagree on " + to_string(u) + " = "
                                + to_string(v));
      }
      if (by_diagram->value != Verdict::budget_exceeded) {
        return *by_diagram;
      }
      return *by_rewrite;
    }
    return by_diagram ? *by_diagram : *by_rewrite;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal forms
  ////////////////////////////////////////////////////////////////////////

  NormalFormResult regular_normal_form(Presentation const& p,
                                       PowerWord const&    g,
                                       Budget const&       caps,
                                       Engine              engine,
                                       bool                check_uniqueness) {
    NormalFormResult result;
    if (is_regular(g)) {
      result.normal_form            = g;
      result.outcome.value          = Verdict::yes;
      result.outcome.witness.kind   = Witness::Kind::free_reduction;
      result.outcome.witness.engine = "free";
      result.candidates             = 1;
      return result;
    }
    int const                    n = std::max(p.params.n, g.max_index());
    std::vector<PowerWord> const S = p.relator_words();
    AbelianLattice const         lattice(n, S);

    std::int64_t const n4    = checked_mul(checked_mul(n, n), checked_mul(n, n));
    std::int64_t const bound = checked_add(checked_mul(n + 1, g.length()),
                                           checked_mul(n4, p.max_relator_length()));
    std::int64_t const limit = std::min(bound, caps.max_word_len);
    result.bound_truncated   = limit < bound;

    std::vector<PowerWord> candidates;
    bool const complete = lattice.for_each_coset_point(
        abelian_image(g, n), limit, caps.max_states,
        [&](std::vector<std::int64_t> const& e) {
          candidates.push_back(regular_word(e));
          return true;
        });
    if (!complete) {
      result.bound_truncated = true;
    }
    std::sort(candidates.begin(), candidates.end(), DeglexLess{});
    result.candidates = static_cast<std::int64_t>(candidates.size());

    bool all_no = true;
    for (PowerWord const& u : candidates) {
      Outcome o = equals_in_G(p, u, g, caps, engine);
      if (o.value == Verdict::yes) {
        if (result.outcome.value != Verdict::yes) {
          result.normal_form   = u;
          result.outcome       = std::move(o);
          if (!check_uniqueness) {
            break;
          }
        } else {
          result.second_accepted = u;
          break;
        }
      } else if (o.value == Verdict::budget_exceeded) {
        all_no = false;
        if (result.outcome.value != Verdict::yes) {
          ++result.undecided_smaller;
        }
      }
    }
    if (result.outcome.value == Verdict::yes) {
      return result;
    }
    if (all_no && !result.bound_truncated) {
      result.outcome.value = Verdict::no;
      result.outcome.note  = "no regular word within the bound is equal";
    } else {
      result.outcome.value = Verdict::budget_exceeded;
      result.outcome.note  = "no regular word proved equal within budget";
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugacy
  ////////////////////////////////////////////////////////////////////////

  Outcome are_conjugate(Presentation const& p,
                        PowerWord const&    u,
                        PowerWord const&    v,
                        Budget const&       caps) {
    Outcome                      out;
    std::vector<PowerWord> const S = p.relator_words();
    Letters const                a = u.letters();
    Letters const                b = v.letters();

    // Free conjugacy: cyclic reductions agree up to rotation.
    {
      FaceLibrary const no_faces({});
      PeelReplay const  ru = replay_peeling(no_faces, a, {});
      PeelReplay const  rv = replay_peeling(no_faces, b, {});
      if (ru.current == rv.current) {
        out.value              = Verdict::yes;
        out.witness.kind       = Witness::Kind::conjugate_product;
        out.witness.engine     = "free";
        out.witness.conjugator = PowerWord::from_letters(
            free_reduce(concat(ru.conjugator, inverse(rv.conjugator))));
        return out;
      }
    }
    int const            n = alphabet_size(p, u, v);
    AbelianLattice const lattice(n, S);
    if (!lattice.same_coset(u, v)) {
      auto x = abelian_image(u, n);
      auto y = abelian_image(v, n);
      for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = checked_add(x[k], -y[k]);
      }
      out.value                      = Verdict::no;
      out.witness.kind               = Witness::Kind::abelian_obstruction;
      out.witness.engine             = "abelian";
      out.witness.abelian_difference = std::move(x);
      return out;
    }
    if (S.empty()) {
      out.value          = Verdict::no;
      out.witness.kind   = Witness::Kind::free_reduction;
      out.witness.engine = "free";
      out.note           = "cyclic reductions differ in a free group";
      return out;
    }

    // A trivial side is conjugate only to trivial words.
    PowerWord const empty;
    Outcome const   tu = equals_in_G(p, u, empty, caps);
    Outcome const   tv = equals_in_G(p, v, empty, caps);
    if (tu.value == Verdict::yes || tv.value == Verdict::yes) {
      Outcome eq = equals_in_G(p, u, v, caps);
      if (eq.value == Verdict::yes) {
        eq.witness.conjugator = PowerWord{};
      }
      return eq;
    }
    bool const both_nontrivial = tu.value == Verdict::no && tv.value == Verdict::no;

    // Annular diagrams over relators no longer than q(|u| + |v|).
    auto const         q        = p.params.q();
    std::int64_t const contours = checked_add(u.length(), v.length());
    std::int64_t       by_q     = caps.max_edges;
    if (q) {
      by_q = to_int64_saturated(floor(*q * Rational(contours)));
    }
    std::int64_t const edges  = std::min(by_q, caps.max_edges);
    bool const         capped = edges < by_q || !q;

    std::vector<PowerWord> faces_used;
    for (PowerWord const& s : S) {
      if (s.length() <= by_q) {
        faces_used.push_back(s);
      }
    }
    std::int64_t const perimeter = 2 * edges - contours;
    bool const complete_ok = both_nontrivial && !capped && completeness_contract(p);
    if (perimeter < 0) {
      if (complete_ok) {
        out.value        = Verdict::no;
        out.witness.kind = Witness::Kind::exhaustive_search;
        out.note         = "contours longer than the edge bound";
        return out;
      }
      return budget("edge cap below the contour length");
    }
    FaceLibrary const faces(faces_used);
    PeelingSearch     side_u(faces, caps, perimeter);
    SearchStatus const su = side_u.run(a);
    PeelingSearch      side_v(faces, caps, perimeter);
    SearchStatus const sv = side_v.run(b, [&](std::int64_t id) {
      std::int64_t const hit = side_u.find(side_v.node(id).word);
      return hit >= 0 && side_u.node(hit).cost + side_v.node(id).cost <= perimeter;
    });
    std::int64_t const states = static_cast<std::int64_t>(side_u.states() + side_v.states());
    if (sv == SearchStatus::found) {
      Letters const&   meet = side_v.node(side_v.goal()).word;
      PeelReplay const ru   = replay_peeling(faces, a, side_u.path_to(side_u.find(meet)));
      PeelReplay const rv   = replay_peeling(faces, b, side_v.path_to(side_v.goal()));
      Letters const    c    = free_reduce(concat(ru.conjugator, inverse(rv.conjugator)));
      out.value              = Verdict::yes;
      out.witness.kind       = Witness::Kind::conjugate_product;
      out.witness.engine     = "diagram";
      out.witness.conjugator = PowerWord::from_letters(c);
      out.witness.product    = ru.product;
      PowerWord const cw     = PowerWord::from_letters(c);
      for (auto it = rv.product.rbegin(); it != rv.product.rend(); ++it) {
        out.witness.product.push_back({cw * it->conjugator, it->relator.inverse()});
      }
      out.witness.diagram_edges = (side_u.node(side_u.find(meet)).cost
                                   + side_v.node(side_v.goal()).cost + contours) / 2;
      out.witness.states = states;
      return out;
    }
    if (su == SearchStatus::exhausted && sv == SearchStatus::exhausted && complete_ok) {
      out.value          = Verdict::no;
      out.witness.kind   = Witness::Kind::exhaustive_search;
      out.witness.engine = "diagram";
      out.witness.states = states;
      out.note           = "no annular diagram within q(|u|+|v|) edges";
      return out;
    }
    Outcome o = budget(both_nontrivial ? "annular search inconclusive within budget"
                                       : "triviality of an input is undecided");
    o.witness.engine = "diagram";
    o.witness.states = states;
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness replay
  ////////////////////////////////////////////////////////////////////////

  bool is_relator_rotation(std::span<PowerWord const> S, PowerWord const& w) {
    if (S.empty() || w.empty()) {
      return false;
    }
    return FaceLibrary(S).is_face_label(w.letters());
  }

  namespace {
    bool product_matches(std::span<PowerWord const> S,
                         ConjugateProduct const&    product,
                         PowerWord const&           target) {
      for (Conjugate const& c : product) {
        if (!is_relator_rotation(S, c.relator)) {
          return false;
        }
      }
      return evaluate(product) == target;
    }

    // y = x * (conjugate of a relator) in the free group.
    bool one_relator_step(std::span<PowerWord const> S,
                          PowerWord const&           x,
                          PowerWord const&           y) {
      CyclicReduction const cr = cyclically_reduce(x.inverse() * y);
      return is_relator_rotation(S, cr.core);
    }
  }  // namespace

  bool verify_equality_witness(std::span<PowerWord const> S,
                               PowerWord const&           u,
                               PowerWord const&           v,
                               Witness const&             w) {
    switch (w.kind) {
      case Witness::Kind::free_reduction:
        return u == v;
      case Witness::Kind::conjugate_product:
        return product_matches(S, w.product, u * v.inverse());
      case Witness::Kind::rewrite_trace: {
        if (w.trace.empty() || w.trace.front() != u || w.trace.back() != v) {
          return false;
        }
        for (std::size_t k = 1; k < w.trace.size(); ++k) {
          if (!one_relator_step(S, w.trace[k - 1], w.trace[k])) {
            return false;
          }
        }
        return true;
      }
      default:
        return false;
    }
  }

  bool verify_conjugacy_witness(std::span<PowerWord const> S,
                                PowerWord const&           u,
                                PowerWord const&           v,
                                Witness const&             w) {
    if (!w.conjugator) {
      return false;
    }
    PowerWord const& c      = *w.conjugator;
    PowerWord const  target = u * c * v.inverse() * c.inverse();
    switch (w.kind) {
      case Witness::Kind::conjugate_product:
        return product_matches(S, w.product, target);
      case Witness::Kind::free_reduction:
        return target.empty();
      case Witness::Kind::rewrite_trace:
        // u == v with trivial conjugator.
        return c.empty() && verify_equality_witness(S, u, v, w);
      default:
        return false;
    }
  }

}  // namespace filebasis
