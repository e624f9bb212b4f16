#include <algorithm>
#include <map>
#include <set>

#include "filebasis/diagram.hpp"
#include "filebasis/errors.hpp"

namespace filebasis {

  ////////////////////////////////////////////////////////////////////////
  // Immediately cancellable pairs
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::pair<int, int>> find_immediately_cancellable(Diagram const& d) {
    Incidence const inc(d);
    struct PairShape {
      bool         conjugate = false;
      std::int64_t shift     = 0;  // la - lb
      std::int64_t period    = 1;
    };
    std::map<std::pair<int, int>, PairShape> shapes;
    std::set<std::pair<int, int>>            found;

    for (std::size_t e = 0; e < d.darts.size(); ++e) {
      int const f1 = inc.face_of[e];
      int const f2 = inc.face_of[static_cast<std::size_t>(d.darts[e].inv)];
      if (f1 < 0 || f2 < 0 || f1 == f2) {
        continue;
      }
      auto const P = static_cast<std::int64_t>(d.faces[static_cast<std::size_t>(f1)].size());
      if (static_cast<std::int64_t>(d.faces[static_cast<std::size_t>(f2)].size()) != P) {
        continue;
      }
      std::pair<int, int> const key{std::min(f1, f2), std::max(f1, f2)};
      if (found.contains(key)) {
        continue;
      }
      auto it = shapes.find({f1, f2});
      if (it == shapes.end()) {
        Letters const     A  = d.face_label(static_cast<std::size_t>(f1));
        Letters const     B  = inverse(d.face_label(static_cast<std::size_t>(f2)));
        std::size_t const la = least_rotation(A);
        std::size_t const lb = least_rotation(B);
        PairShape         shape;
        Letters const     ca = rotate_left(A, la);
        shape.conjugate      = ca == rotate_left(B, lb);
        shape.shift  = static_cast<std::int64_t>(la) - static_cast<std::int64_t>(lb);
        shape.period = static_cast<std::int64_t>(rotation_period(ca));
        it           = shapes.emplace(std::pair{f1, f2}, shape).first;
      }
      PairShape const& shape = it->second;
      if (!shape.conjugate) {
        continue;
      }
      // Face f1 read from e against the inverse of f2 read up to inv(e).
      std::int64_t const i = inc.position[e];
      std::int64_t const k = inc.position[static_cast<std::size_t>(d.darts[e].inv)];
      std::int64_t const j = P - 1 - k;
      std::int64_t const delta = ((i - j - shape.shift) % shape.period + shape.period) % shape.period;
      if (delta == 0) {
        found.insert(key);
      }
    }
    return {found.begin(), found.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Arcs
  ////////////////////////////////////////////////////////////////////////

  std::vector<Cycle> maximal_arcs(Diagram const& d) {
    std::vector<int> const        deg = d.degrees();
    std::vector<std::vector<int>> out_darts(static_cast<std::size_t>(d.vertex_count));
    for (std::size_t k = 0; k < d.darts.size(); ++k) {
      out_darts[static_cast<std::size_t>(d.darts[k].from)].push_back(static_cast<int>(k));
    }
    std::vector<bool> used(d.darts.size(), false);
    auto mark = [&](int k) {
      used[static_cast<std::size_t>(k)]                                         = true;
      used[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(k)].inv)] = true;
    };
    auto next_at = [&](int cur) {
      int const               v   = d.darts[static_cast<std::size_t>(cur)].to;
      std::vector<int> const& out = out_darts[static_cast<std::size_t>(v)];
      int const               back = d.darts[static_cast<std::size_t>(cur)].inv;
      return out[0] == back ? out[1] : out[0];
    };

    std::vector<Cycle> arcs;
    for (std::size_t k = 0; k < d.darts.size(); ++k) {
      if (used[k] || deg[static_cast<std::size_t>(d.darts[k].from)] == 2) {
        continue;
      }
      Cycle arc{static_cast<int>(k)};
      mark(static_cast<int>(k));
      int cur = static_cast<int>(k);
      while (deg[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(cur)].to)] == 2) {
        int const nxt = next_at(cur);
        if (used[static_cast<std::size_t>(nxt)]) {
          break;
        }
        arc.push_back(nxt);
        mark(nxt);
        cur = nxt;
      }
      arcs.push_back(std::move(arc));
    }
    for (std::size_t k = 0; k < d.darts.size(); ++k) {
      if (used[k]) {
        continue;
      }
      Cycle arc{static_cast<int>(k)};
      mark(static_cast<int>(k));
      int cur = static_cast<int>(k);
      while (true) {
        int const nxt = next_at(cur);
        if (used[static_cast<std::size_t>(nxt)]) {
          break;
        }
        arc.push_back(nxt);
        mark(nxt);
        cur = nxt;
      }
      arcs.push_back(std::move(arc));
    }
    return arcs;
  }

  ////////////////////////////////////////////////////////////////////////
  // Condition B
  ////////////////////////////////////////////////////////////////////////

  bool ConditionBReport::ok() const {
    return std::all_of(faces.begin(), faces.end(), [](FaceConditionB const& f) {
      return f.b0 && f.b1 && f.b2;
    });
  }

  namespace {
    // Longest double-selected arc on each face.
    std::vector<std::int64_t> longest_double_selected(Diagram const&   d,
                                                      Incidence const& inc,
                                                      Selection const& sel) {
      std::vector<std::int64_t> longest(d.faces.size(), 0);
      std::vector<int> const    deg = d.degrees();
      for (Cycle const& arc : maximal_arcs(d)) {
        auto const k = static_cast<std::int64_t>(arc.size());
        Dart const& first = d.darts[static_cast<std::size_t>(arc.front())];
        Dart const& last  = d.darts[static_cast<std::size_t>(arc.back())];
        bool const  closed = first.from == last.to && deg[static_cast<std::size_t>(first.from)] == 2;
        std::int64_t const span_len = closed ? 2 * k : k;
        std::int64_t const cap      = closed ? std::max<std::int64_t>(1, k - 1) : k;

        auto fwd = [&](std::int64_t t) { return arc[static_cast<std::size_t>(t % k)]; };
        std::int64_t run = 0;
        int          prev = -1;
        for (std::int64_t t = 0; t < span_len; ++t) {
          int const          a  = fwd(t);
          int const          b  = d.darts[static_cast<std::size_t>(a)].inv;
          std::int64_t const oa = selected_offset(d, inc, sel, a);
          std::int64_t const ob = selected_offset(d, inc, sel, b);
          if (oa < 0 || ob < 0) {
            run  = 0;
            prev = -1;
            continue;
          }
          bool extend = false;
          if (prev >= 0) {
            int const p  = prev;
            int const pb = d.darts[static_cast<std::size_t>(p)].inv;
            extend = inc.face_of[static_cast<std::size_t>(p)] == inc.face_of[static_cast<std::size_t>(a)]
                     && inc.face_of[static_cast<std::size_t>(pb)] == inc.face_of[static_cast<std::size_t>(b)]
                     && selected_offset(d, inc, sel, p) + 1 == oa
                     && selected_offset(d, inc, sel, pb) == ob + 1;
          }
          run  = extend ? std::min(run + 1, cap) : 1;
          prev = a;
          for (int f : {inc.face_of[static_cast<std::size_t>(a)], inc.face_of[static_cast<std::size_t>(b)]}) {
            longest[static_cast<std::size_t>(f)] = std::max(longest[static_cast<std::size_t>(f)], run);
          }
        }
      }
      return longest;
    }
  }  // namespace

  ConditionBReport check_condition_B(Diagram const&   d,
                                     Selection const& sel,
                                     Rational const&  lambda1,
                                     Rational const&  lambda2) {
    Incidence const                 inc(d);
    std::vector<std::int64_t> const dbl = longest_double_selected(d, inc, sel);
    ConditionBReport                report;
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      FaceConditionB r;
      r.face      = static_cast<int>(f);
      r.perimeter = static_cast<std::int64_t>(d.faces[f].size());
      auto const paths = sel.on_face(static_cast<int>(f));
      for (SelectedPath const& s : paths) {
        r.selected_length = std::max(r.selected_length, s.length);
      }
      r.b0 = paths.size() == 1 && paths.front().length >= 1
             && paths.front().length <= r.perimeter;
      r.b1_rhs             = (1 - lambda1) * r.perimeter;
      r.b1                 = Rational(r.selected_length) >= r.b1_rhs;
      r.longest_double_arc = dbl[f];
      r.b2_rhs             = lambda2 * r.perimeter;
      r.b2                 = Rational(r.longest_double_arc) <= r.b2_rhs;
      report.faces.push_back(std::move(r));
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Metrics and semisimple submaps
  ////////////////////////////////////////////////////////////////////////

  DiagramMetrics metrics(Diagram const& d, Selection const& sel) {
    Incidence const inc(d);
    DiagramMetrics  m;
    m.E = d.edge_count();
    m.F = static_cast<std::int64_t>(d.faces.size());
    for (Cycle const& c : d.faces) {
      m.Sigma += static_cast<std::int64_t>(c.size());
    }
    for (std::size_t k = 0; k < d.darts.size(); ++k) {
      int const b = d.darts[k].inv;
      if (inc.contour_of[static_cast<std::size_t>(b)] >= 0
          && selected_offset(d, inc, sel, static_cast<int>(k)) >= 0) {
        ++m.S;
      }
    }
    return m;
  }

  bool is_semisimple(Diagram const& d) {
    Incidence const inc(d);
    for (std::size_t k = 0; k < d.darts.size(); ++k) {
      if (inc.face_of[k] < 0
          && inc.face_of[static_cast<std::size_t>(d.darts[k].inv)] < 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<Submap> maximal_semisimple_submaps(Diagram const& d) {
    Incidence const   inc(d);
    std::size_t const D = d.darts.size();
    std::vector<bool> kept(D, false);
    for (std::size_t k = 0; k < D; ++k) {
      kept[k] = inc.face_of[k] >= 0 || inc.face_of[static_cast<std::size_t>(d.darts[k].inv)] >= 0;
    }
    std::vector<int> comp(static_cast<std::size_t>(d.vertex_count), -1);
    int              count = 0;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(d.vertex_count));
    for (std::size_t k = 0; k < D; ++k) {
      if (kept[k]) {
        adj[static_cast<std::size_t>(d.darts[k].from)].push_back(d.darts[k].to);
      }
    }
    for (int v = 0; v < d.vertex_count; ++v) {
      if (comp[static_cast<std::size_t>(v)] >= 0) {
        continue;
      }
      std::vector<int> stack{v};
      comp[static_cast<std::size_t>(v)] = count;
      while (!stack.empty()) {
        int const x = stack.back();
        stack.pop_back();
        for (int y : adj[static_cast<std::size_t>(x)]) {
          if (comp[static_cast<std::size_t>(y)] < 0) {
            comp[static_cast<std::size_t>(y)] = count;
            stack.push_back(y);
          }
        }
      }
      ++count;
    }

    // Contour successor in the original map.
    std::vector<int> succ(D, -1);
    for (Cycle const& c : d.contours) {
      for (std::size_t t = 0; t < c.size(); ++t) {
        succ[static_cast<std::size_t>(c[t])] = c[(t + 1) % c.size()];
      }
    }

    std::vector<Submap> subs(static_cast<std::size_t>(count));
    std::vector<int>    vnew(static_cast<std::size_t>(d.vertex_count), -1);
    std::vector<int>    dnew(D, -1);
    for (int v = 0; v < d.vertex_count; ++v) {
      Submap& s = subs[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
      vnew[static_cast<std::size_t>(v)] = static_cast<int>(s.vertex_map.size());
      s.vertex_map.push_back(v);
    }
    for (std::size_t k = 0; k < D; ++k) {
      if (!kept[k]) {
        continue;
      }
      Submap& s = subs[static_cast<std::size_t>(comp[static_cast<std::size_t>(d.darts[k].from)])];
      dnew[k]   = static_cast<int>(s.dart_map.size());
      s.dart_map.push_back(static_cast<int>(k));
    }
    for (Submap& s : subs) {
      s.diagram.vertex_count = static_cast<int>(s.vertex_map.size());
      for (int k : s.dart_map) {
        Dart e = d.darts[static_cast<std::size_t>(k)];
        e.inv  = dnew[static_cast<std::size_t>(e.inv)];
        e.from = vnew[static_cast<std::size_t>(e.from)];
        e.to   = vnew[static_cast<std::size_t>(e.to)];
        s.diagram.darts.push_back(e);
      }
    }
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      Cycle const& c = d.faces[f];
      Submap&      s = subs[static_cast<std::size_t>(
          comp[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(c.front())].from)])];
      Cycle nc;
      for (int k : c) {
        nc.push_back(dnew[static_cast<std::size_t>(k)]);
      }
      s.face_map.push_back(static_cast<int>(f));
      s.diagram.faces.push_back(std::move(nc));
    }
    // Boundary walks of each component: skip deleted edges by turning
    // around them.
    std::vector<bool> walked(D, false);
    for (std::size_t k = 0; k < D; ++k) {
      if (!kept[k] || inc.face_of[k] >= 0 || walked[k]) {
        continue;
      }
      Submap& s = subs[static_cast<std::size_t>(comp[static_cast<std::size_t>(d.darts[k].from)])];
      Cycle   nc;
      int     cur = static_cast<int>(k);
      while (!walked[static_cast<std::size_t>(cur)]) {
        walked[static_cast<std::size_t>(cur)] = true;
        nc.push_back(dnew[static_cast<std::size_t>(cur)]);
        int x = succ[static_cast<std::size_t>(cur)];
        while (!kept[static_cast<std::size_t>(x)]) {
          x = succ[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(x)].inv)];
        }
        cur = x;
      }
      s.diagram.contours.push_back(std::move(nc));
    }
    for (Submap& s : subs) {
      if (s.diagram.darts.empty()) {
        s.diagram.contours.push_back({});
      }
    }
    return subs;
  }

  Selection restrict_selection(Selection const& sel, Submap const& sub) {
    Selection out;
    for (SelectedPath s : sel.paths) {
      auto it = std::find(sub.face_map.begin(), sub.face_map.end(), s.face);
      if (it == sub.face_map.end()) {
        continue;
      }
      s.face = static_cast<int>(it - sub.face_map.begin());
      out.paths.push_back(s);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Inequalities
  ////////////////////////////////////////////////////////////////////////

  InequalityResult check_condition_X(Diagram const&   d,
                                     Selection const& sel,
                                     Rational const&  mu) {
    if (!is_semisimple(d)) {
      throw PreconditionViolation("condition X needs a semisimple map");
    }
    InequalityResult r;
    r.metrics = metrics(d, sel);
    r.lhs     = r.metrics.S;
    r.rhs     = Rational(r.metrics.E) - mu * r.metrics.Sigma;
    r.holds   = r.lhs >= r.rhs;
    return r;
  }

  InequalityResult check_main_lemma(Diagram const&   d,
                                    Selection const& sel,
                                    Rational const&  lambda1,
                                    Rational const&  lambda2) {
    if (d.contours.size() > 3) {
      throw PreconditionViolation("more than 3 contours");
    }
    if (2 * lambda1 + 13 * lambda2 >= 1) {
      throw PreconditionViolation("2 lambda1 + 13 lambda2 >= 1");
    }
    ConditionBReport const b = check_condition_B(d, sel, lambda1, lambda2);
    if (!b.ok()) {
      throw PreconditionViolation("selection fails condition B");
    }
    Rational const   mu = lambda1 + 5 * lambda2;
    InequalityResult r;
    r.metrics = metrics(d, sel);
    r.lhs     = r.metrics.S;
    r.rhs     = (1 - 2 * mu) * r.metrics.Sigma;
    r.holds   = r.lhs >= r.rhs;
    return r;
  }

  InequalityResult check_letter_budget(Diagram const&       d,
                                       Selection const&     sel,
                                       std::span<int const> letters,
                                       int                  n) {
    if (letters.empty()) {
      throw PreconditionViolation("empty letter set");
    }
    if (d.faces.empty()) {
      throw PreconditionViolation("degenerate diagram");
    }
    std::set<int> const chosen(letters.begin(), letters.end());
    for (int x : chosen) {
      if (x < 1 || x > n) {
        throw PreconditionViolation("letter x" + std::to_string(x) + " outside the alphabet");
      }
    }
    Incidence const  inc(d);
    InequalityResult r;
    r.metrics = metrics(d, sel);
    std::int64_t S = 0;
    for (std::size_t k = 0; k < d.darts.size(); ++k) {
      int const b = d.darts[k].inv;
      if (inc.contour_of[static_cast<std::size_t>(b)] >= 0
          && selected_offset(d, inc, sel, static_cast<int>(k)) >= 0
          && chosen.contains(std::abs(d.darts[k].label))) {
        ++S;
      }
    }
    r.lhs   = S;
    r.rhs   = Rational(static_cast<std::int64_t>(chosen.size()), n) * r.metrics.Sigma;
    r.holds = r.lhs < r.rhs;
    return r;
  }

}  // namespace filebasis
