#include "filebasis/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "filebasis/errors.hpp"

namespace filebasis {

  Letters Diagram::label(Cycle const& path) const {
    Letters out;
    out.reserve(path.size());
    for (int k : path) {
      out.push_back(darts[static_cast<std::size_t>(k)].label);
    }
    return out;
  }

  std::vector<int> Diagram::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
    for (Dart const& e : darts) {
      if (e.from >= 0 && e.from < vertex_count) {
        ++deg[static_cast<std::size_t>(e.from)];
      }
    }
    return deg;
  }

  Incidence::Incidence(Diagram const& d)
      : face_of(d.darts.size(), -1), contour_of(d.darts.size(), -1), position(d.darts.size(), -1) {
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      for (std::size_t t = 0; t < d.faces[f].size(); ++t) {
        auto const k = static_cast<std::size_t>(d.faces[f][t]);
        face_of[k]   = static_cast<int>(f);
        position[k]  = static_cast<std::int64_t>(t);
      }
    }
    for (std::size_t c = 0; c < d.contours.size(); ++c) {
      for (std::size_t t = 0; t < d.contours[c].size(); ++t) {
        auto const k  = static_cast<std::size_t>(d.contours[c][t]);
        contour_of[k] = static_cast<int>(c);
        position[k]   = static_cast<std::int64_t>(t);
      }
    }
  }

  namespace {
    // Darts 2k: k -> k+1 reading label[k], 2k+1 its inverse, on a cycle of
    // |label| vertices (a path of |label|+1 vertices when open).
    Diagram strand(std::span<Letter const> label, bool closed) {
      Diagram      d;
      int const    P = static_cast<int>(label.size());
      d.vertex_count = closed ? P : P + 1;
      for (int k = 0; k < P; ++k) {
        int const head = closed ? (k + 1) % P : k + 1;
        d.darts.push_back({2 * k + 1, k, head, label[static_cast<std::size_t>(k)]});
        d.darts.push_back({2 * k, head, k, -label[static_cast<std::size_t>(k)]});
      }
      return d;
    }

    Cycle forward_cycle(int P) {
      Cycle c;
      for (int k = 0; k < P; ++k) {
        c.push_back(2 * k);
      }
      return c;
    }

    Cycle backward_cycle(int P) {
      Cycle c;
      for (int k = P - 1; k >= 0; --k) {
        c.push_back(2 * k + 1);
      }
      return c;
    }
  }  // namespace

  Diagram one_face_disc(std::span<Letter const> label) {
    if (label.empty()) {
      throw PreconditionViolation("a face needs a nonempty label");
    }
    Diagram   d = strand(label, true);
    int const P = static_cast<int>(label.size());
    d.faces.push_back(forward_cycle(P));
    d.contours.push_back(backward_cycle(P));
    return d;
  }

  Diagram degenerate_disc(std::span<Letter const> label) {
    Diagram   d = strand(label, false);
    int const P = static_cast<int>(label.size());
    Cycle     c = forward_cycle(P);
    Cycle     back = backward_cycle(P);
    c.insert(c.end(), back.begin(), back.end());
    d.contours.push_back(std::move(c));
    return d;
  }

  Diagram face_double(std::span<Letter const> label) {
    if (label.empty()) {
      throw PreconditionViolation("a face needs a nonempty label");
    }
    Diagram   d = strand(label, true);
    int const P = static_cast<int>(label.size());
    d.faces.push_back(forward_cycle(P));
    d.faces.push_back(backward_cycle(P));
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  bool DiagramReport::has(std::string_view code) const {
    return std::any_of(issues.begin(), issues.end(),
                       [&](DiagramIssue const& i) { return i.code == code; });
  }

  namespace {
    struct CanonicalEntry {
      int          relator;
      int          sign;
      std::size_t  least;
    };

    std::string dart_name(std::size_t k) {
      return "dart " + std::to_string(k);
    }

    int find_root(std::vector<int>& parent, int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)]
            = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    }

    void check_cycle(Diagram const&             d,
                     Cycle const&               c,
                     std::string const&         name,
                     std::vector<DiagramIssue>& issues) {
      for (std::size_t t = 0; t < c.size(); ++t) {
        int const k = c[t];
        if (k < 0 || static_cast<std::size_t>(k) >= d.darts.size()) {
          issues.push_back({"dart-range", name + " position " + std::to_string(t)});
          return;
        }
      }
      for (std::size_t t = 0; t < c.size(); ++t) {
        Dart const& a = d.darts[static_cast<std::size_t>(c[t])];
        Dart const& b = d.darts[static_cast<std::size_t>(c[(t + 1) % c.size()])];
        if (a.to != b.from) {
          issues.push_back({"open-cycle", name + " position " + std::to_string(t)});
        }
      }
    }
  }  // namespace

  DiagramReport validate_diagram(Diagram const& d, std::span<PowerWord const> relators) {
    DiagramReport report;
    auto&         issues = report.issues;
    std::size_t const D = d.darts.size();
    if (d.vertex_count < 1) {
      issues.push_back({"no-vertices", "diagram"});
      return report;
    }
    for (std::size_t k = 0; k < D; ++k) {
      Dart const& e = d.darts[k];
      if (e.inv < 0 || static_cast<std::size_t>(e.inv) >= D || static_cast<std::size_t>(e.inv) == k
          || d.darts[static_cast<std::size_t>(e.inv)].inv != static_cast<int>(k)) {
        issues.push_back({"involution", dart_name(k)});
        continue;
      }
      if (e.from < 0 || e.from >= d.vertex_count || e.to < 0 || e.to >= d.vertex_count) {
        issues.push_back({"vertex-range", dart_name(k)});
        continue;
      }
      Dart const& r = d.darts[static_cast<std::size_t>(e.inv)];
      if (r.from != e.to || r.to != e.from) {
        issues.push_back({"endpoints", dart_name(k)});
      }
      if (e.label == 0 || r.label != -e.label) {
        issues.push_back({"label", dart_name(k)});
      }
    }
    if (!issues.empty()) {
      return report;
    }

    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      if (d.faces[f].empty()) {
        issues.push_back({"empty-face", "face " + std::to_string(f)});
      }
      check_cycle(d, d.faces[f], "face " + std::to_string(f), issues);
    }
    for (std::size_t c = 0; c < d.contours.size(); ++c) {
      if (d.contours[c].empty() && D > 0) {
        issues.push_back({"empty-contour", "contour " + std::to_string(c)});
      }
      check_cycle(d, d.contours[c], "contour " + std::to_string(c), issues);
    }
    if (report.has("dart-range")) {
      return report;
    }

    std::vector<int> uses(D, 0);
    for (Cycle const& c : d.faces) {
      for (int k : c) {
        ++uses[static_cast<std::size_t>(k)];
      }
    }
    for (Cycle const& c : d.contours) {
      for (int k : c) {
        ++uses[static_cast<std::size_t>(k)];
      }
    }
    for (std::size_t k = 0; k < D; ++k) {
      if (uses[k] == 0) {
        issues.push_back({"dart-uncovered", dart_name(k)});
      } else if (uses[k] > 1) {
        issues.push_back({"dart-repeated", dart_name(k)});
      }
    }

    std::vector<int> parent(static_cast<std::size_t>(d.vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    for (Dart const& e : d.darts) {
      parent[static_cast<std::size_t>(find_root(parent, e.from))] = find_root(parent, e.to);
    }
    int const root = find_root(parent, 0);
    for (int v = 1; v < d.vertex_count; ++v) {
      if (find_root(parent, v) != root) {
        issues.push_back({"disconnected", "vertex " + std::to_string(v)});
        break;
      }
    }

    report.euler = static_cast<std::int64_t>(d.vertex_count) - d.edge_count()
                   + static_cast<std::int64_t>(d.faces.size())
                   + static_cast<std::int64_t>(d.contours.size());
    if (report.euler != 2) {
      issues.push_back({"euler", "V - E + F + C = " + std::to_string(report.euler)});
    }

    std::unordered_map<Letters, CanonicalEntry, LettersHash> canonical;
    for (std::size_t j = 0; j < relators.size(); ++j) {
      Letters const fwd = relators[j].letters();
      Letters const bwd = inverse(fwd);
      for (auto const& [w, sign] : {std::pair{&fwd, 1}, std::pair{&bwd, -1}}) {
        if (w->empty()) {
          continue;
        }
        std::size_t const least = least_rotation(*w);
        canonical.emplace(rotate_left(*w, least),
                          CanonicalEntry{static_cast<int>(j), sign, least});
      }
    }
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      if (d.faces[f].empty()) {
        continue;
      }
      Letters const     L     = d.face_label(f);
      std::size_t const least = least_rotation(L);
      auto const        it    = canonical.find(rotate_left(L, least));
      if (it == canonical.end()) {
        issues.push_back({"face-label", "face " + std::to_string(f)});
        continue;
      }
      auto const P = static_cast<std::int64_t>(L.size());
      std::int64_t const rot
          = ((static_cast<std::int64_t>(it->second.least) - static_cast<std::int64_t>(least)) % P
             + P)
            % P;
      report.matches.push_back({static_cast<int>(f), it->second.relator, it->second.sign, rot});
    }
    return report;
  }

  std::int64_t face_rank(Diagram const& d, std::size_t face, Presentation const& p) {
    if (face >= d.faces.size()) {
      throw PreconditionViolation("no face " + std::to_string(face));
    }
    Letters const L   = d.face_label(face);
    Letters const key = rotate_left(L, least_rotation(L));
    for (Relator const& rel : p.relators) {
      if (rel.r.length() != static_cast<std::int64_t>(L.size())) {
        continue;
      }
      for (Letters const& w : {rel.r.letters(), rel.r.inverse().letters()}) {
        if (rotate_left(w, least_rotation(w)) == key) {
          return rel.i;
        }
      }
    }
    throw PreconditionViolation("face " + std::to_string(face) + " matches no relator");
  }

  ////////////////////////////////////////////////////////////////////////
  // Selections
  ////////////////////////////////////////////////////////////////////////

  std::vector<SelectedPath> Selection::on_face(int f) const {
    std::vector<SelectedPath> out;
    for (SelectedPath const& s : paths) {
      if (s.face == f) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::int64_t selected_offset(Diagram const&   d,
                               Incidence const& inc,
                               Selection const& sel,
                               int              dart) {
    int const f = inc.face_of[static_cast<std::size_t>(dart)];
    if (f < 0) {
      return -1;
    }
    auto const         P   = static_cast<std::int64_t>(d.faces[static_cast<std::size_t>(f)].size());
    std::int64_t const pos = inc.position[static_cast<std::size_t>(dart)];
    for (SelectedPath const& s : sel.paths) {
      if (s.face != f) {
        continue;
      }
      std::int64_t const off = ((pos - s.start) % P + P) % P;
      if (off < s.length) {
        return off;
      }
    }
    return -1;
  }

  namespace {
    struct CyclicRun {
      Letter       letter;
      std::int64_t start;
      std::int64_t length;
    };

    std::vector<CyclicRun> cyclic_runs(Letters const& L) {
      auto const   P = static_cast<std::int64_t>(L.size());
      std::int64_t b = -1;
      for (std::int64_t k = 0; k < P; ++k) {
        if (L[static_cast<std::size_t>(k)] != L[static_cast<std::size_t>((k + P - 1) % P)]) {
          b = k;
          break;
        }
      }
      std::vector<CyclicRun> runs;
      if (b < 0) {
        return runs;
      }
      for (std::int64_t t = 0; t < P; ++t) {
        Letter const a = L[static_cast<std::size_t>((b + t) % P)];
        if (runs.empty() || runs.back().letter != a) {
          runs.push_back({a, (b + t) % P, 1});
        } else {
          ++runs.back().length;
        }
      }
      return runs;
    }

    // (start, m) of every x_1^m ... x_n^m in the cyclic word L with
    // m (2n - 2) > |L|.
    std::vector<std::pair<std::int64_t, std::int64_t>> ascending_blocks(Letters const& L, int n) {
      std::vector<std::pair<std::int64_t, std::int64_t>> out;
      std::vector<CyclicRun> const runs = cyclic_runs(L);
      auto const R = static_cast<std::int64_t>(runs.size());
      auto const P = static_cast<std::int64_t>(L.size());
      if (n < 3 || R < n) {
        return out;
      }
      auto run = [&](std::int64_t k) -> CyclicRun const& {
        return runs[static_cast<std::size_t>(((k % R) + R) % R)];
      };
      for (std::int64_t k = 0; k < R; ++k) {
        if (run(k).letter != 2) {
          continue;
        }
        std::int64_t const m = run(k).length;
        if (run(k - 1).letter != 1 || run(k - 1).length < m) {
          continue;
        }
        bool ok = true;
        for (int j = 3; j < n && ok; ++j) {
          CyclicRun const& r = run(k + j - 2);
          ok = r.letter == j && r.length == m;
        }
        CyclicRun const& last = run(k + n - 2);
        if (!ok || last.letter != n || last.length < m) {
          continue;
        }
        if (m * (2 * n - 2) <= P) {
          continue;
        }
        CyclicRun const& first = run(k - 1);
        out.emplace_back(((first.start + first.length - m) % P + P) % P, m);
      }
      return out;
    }
  }  // namespace

  std::vector<std::vector<SelectedPath>> special_candidates(Diagram const& d, int n) {
    std::vector<std::vector<SelectedPath>> out(d.faces.size());
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      Letters const L = d.face_label(f);
      auto const    P = static_cast<std::int64_t>(L.size());
      for (auto const& [start, m] : ascending_blocks(L, n)) {
        out[f].push_back({static_cast<int>(f), start, checked_mul(n, m), 1, m});
      }
      for (auto const& [start, m] : ascending_blocks(inverse(L), n)) {
        std::int64_t const len = checked_mul(n, m);
        out[f].push_back({static_cast<int>(f), ((P - start - len) % P + P) % P, len, -1, m});
      }
    }
    return out;
  }

  Selection special_selection(Diagram const& d, int n) {
    if (n < 3) {
      throw NoSelection("special selections need n >= 3");
    }
    Selection sel;
    auto      candidates = special_candidates(d, n);
    for (std::size_t f = 0; f < candidates.size(); ++f) {
      if (candidates[f].size() != 1) {
        throw NoSelection("face " + std::to_string(f) + " has "
                          + std::to_string(candidates[f].size()) + " special subpaths");
      }
      sel.paths.push_back(candidates[f].front());
    }
    return sel;
  }

  ////////////////////////////////////////////////////////////////////////
  // Mirror copy
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Cycle reversed(Diagram const& d, Cycle const& c) {
      Cycle out;
      out.reserve(c.size());
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        out.push_back(d.darts[static_cast<std::size_t>(*it)].inv);
      }
      return out;
    }
  }  // namespace

  Diagram mirror_copy(Diagram const& d) {
    Diagram out = d;
    for (Cycle& c : out.faces) {
      c = reversed(d, c);
    }
    for (Cycle& c : out.contours) {
      c = reversed(d, c);
    }
    return out;
  }

  Selection mirror_selection(Diagram const& d, Selection const& sel) {
    Selection out;
    for (SelectedPath s : sel.paths) {
      auto const P = static_cast<std::int64_t>(d.faces[static_cast<std::size_t>(s.face)].size());
      s.start      = ((P - s.start - s.length) % P + P) % P;
      s.direction  = -s.direction;
      out.paths.push_back(s);
    }
    return out;
  }

}  // namespace filebasis
