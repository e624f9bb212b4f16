#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "filebasis/diagram.hpp"
#include "filebasis/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_diagrams.hpp"

using namespace filebasis;
using namespace filebasis::testing;

namespace {
  std::vector<PowerWord> toy_words() {
    return toy_presentation().relator_words();
  }

  Letters toy_r() {
    return toy_words()[0].letters();
  }

  //! Faces f1 != f2 sharing an edge e such that reading f1 forward from e
  //! and f2 backward from inv(e) gives the same word.
  std::set<std::pair<int, int>> brute_cancellable(Diagram const& d) {
    std::map<int, std::pair<int, std::size_t>> where;
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      for (std::size_t t = 0; t < d.faces[f].size(); ++t) {
        where[d.faces[f][t]] = {static_cast<int>(f), t};
      }
    }
    std::set<std::pair<int, int>> out;
    for (auto const& [e, at] : where) {
      auto const it = where.find(d.darts[static_cast<std::size_t>(e)].inv);
      if (it == where.end() || it->second.first == at.first) {
        continue;
      }
      Cycle const& c1 = d.faces[static_cast<std::size_t>(at.first)];
      Cycle const& c2 = d.faces[static_cast<std::size_t>(it->second.first)];
      if (c1.size() != c2.size()) {
        continue;
      }
      std::size_t const P = c1.size();
      Letters           p1, p2;
      for (std::size_t k = 0; k < P; ++k) {
        p1.push_back(d.darts[static_cast<std::size_t>(c1[(at.second + k) % P])].label);
        p2.push_back(-d.darts[static_cast<std::size_t>(c2[(it->second.second + P - k) % P])].label);
      }
      if (p1 == p2) {
        out.insert(std::minmax(at.first, it->second.first));
      }
    }
    return out;
  }

  Selection scanned_selection(Diagram const& d, int n) {
    Selection sel;
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      auto const paths = scan_special_paths(d.face_label(f), n);
      REQUIRE(paths.size() == 1);
      sel.paths.push_back({static_cast<int>(f), paths[0].start, paths[0].length,
                           paths[0].direction, paths[0].m});
    }
    return sel;
  }
}  // namespace

TEST_CASE("one-face disc over r_1") {
  auto const    S = toy_words();
  Diagram const d = one_face_disc(toy_r());
  DiagramReport const rep = validate_diagram(d, S);
  CHECK(rep.ok());
  CHECK(rep.euler == 2);
  REQUIRE(rep.matches.size() == 1);
  CHECK(rep.matches[0].relator == 0);
  CHECK(rep.matches[0].sign == 1);
  CHECK(rep.matches[0].rotation == 0);
  CHECK(d.label(d.contours[0]) == inverse(toy_r()));

  DiagramReport const rot = validate_diagram(one_face_disc(rotate_left(toy_r(), 3)), S);
  REQUIRE(rot.matches.size() == 1);
  CHECK(rot.matches[0].rotation == 3);
  DiagramReport const inv = validate_diagram(one_face_disc(inverse(toy_r())), S);
  REQUIRE(inv.matches.size() == 1);
  CHECK(inv.matches[0].sign == -1);
}

TEST_CASE("non-relator faces and degenerate maps") {
  auto const          S   = toy_words();
  DiagramReport const bad = validate_diagram(one_face_disc(Letters{1, 2, 3}), S);
  CHECK(bad.has("face-label"));
  CHECK(bad.issues[0].where == "face 0");

  Diagram const deg = degenerate_disc(Letters{1});
  CHECK(validate_diagram(deg, S).ok());
  CHECK(deg.label(deg.contours[0]) == Letters{1, -1});
  CHECK(deg.faces.empty());

  Diagram point;
  point.vertex_count = 1;
  point.contours.emplace_back();
  CHECK(validate_diagram(point, S).ok());

  Diagram none;
  CHECK(validate_diagram(none, S).has("no-vertices"));
}

TEST_CASE("structural faults are located") {
  Diagram d = one_face_disc(toy_r());
  d.darts[4].label = 2;
  DiagramReport const r = validate_diagram(d, toy_words());
  CHECK(r.has("label"));

  Diagram e = one_face_disc(toy_r());
  std::swap(e.faces[0][0], e.faces[0][1]);
  CHECK(validate_diagram(e, toy_words()).has("open-cycle"));

  Diagram f = one_face_disc(toy_r());
  f.contours.emplace_back();
  CHECK(validate_diagram(f, toy_words()).has("empty-contour"));

  Diagram g = one_face_disc(toy_r());
  g.vertex_count += 1;
  DiagramReport const gr = validate_diagram(g, toy_words());
  CHECK(gr.has("disconnected"));
  CHECK(gr.has("euler"));
}

TEST_CASE("special selection on the toy face") {
  Diagram const   d   = one_face_disc(toy_r());
  Selection const sel = special_selection(d, 3);
  REQUIRE(sel.paths.size() == 1);
  CHECK(sel.paths[0] == SelectedPath{0, 0, 15, 1, 5});
  CHECK(15 * 4 > 3 * 17);
  auto const scanned = scan_special_paths(toy_r(), 3);
  REQUIRE(scanned.size() == 1);
  CHECK(scanned[0].start == 0);
  CHECK(scanned[0].length == 15);

  CHECK_THROWS_AS((void)special_selection(one_face_disc(Letters{2, 1, -2, -1}), 2), NoSelection);
  CHECK_THROWS_AS((void)special_selection(one_face_disc(Letters{1, 2, 3, -1, -2}), 3),
                  NoSelection);
}

TEST_CASE("mirror copy") {
  Diagram const d = one_face_disc(toy_r());
  Diagram const m = mirror_copy(d);
  CHECK(mirror_copy(m) == d);
  CHECK(validate_diagram(m, toy_words()).ok());
  Letters const back = m.face_label(0);
  CHECK(rotate_left(back, least_rotation(back))
        == rotate_left(inverse(toy_r()), least_rotation(inverse(toy_r()))));
  Selection const sm = special_selection(m, 3);
  REQUIRE(sm.paths.size() == 1);
  CHECK(sm.paths[0].direction == -1);
  CHECK(sm.paths[0].length == 15);
  CHECK(sm == mirror_selection(d, special_selection(d, 3)));
}

TEST_CASE("face rank") {
  Presentation const toy = toy_presentation();
  CHECK(face_rank(one_face_disc(toy_r()), 0, toy) == 1);
  CHECK(face_rank(one_face_disc(inverse(toy_r())), 0, toy) == 1);
  CHECK_THROWS_AS((void)face_rank(one_face_disc(Letters{1, 2}), 0, toy), PreconditionViolation);

  Presentation const mid = mid_presentation();
  auto const         S   = mid.relator_words();
  std::mt19937_64    rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Diagram const   d   = random_diagram(rng, S, 27, {1, 4, 0.2, 0.1, 2});
    Selection const sel = special_selection(d, 27);
    for (std::size_t a = 0; a < d.faces.size(); ++a) {
      for (std::size_t b = 0; b < d.faces.size(); ++b) {
        auto const ra = face_rank(d, a, mid);
        auto const rb = face_rank(d, b, mid);
        if (ra >= rb) {
          CHECK(d.faces[a].size() >= d.faces[b].size());
        }
        CHECK((ra == rb)
              == (sel.on_face(static_cast<int>(a))[0].length
                  == sel.on_face(static_cast<int>(b))[0].length));
      }
    }
  }
}

TEST_CASE("immediately cancellable pairs") {
  Diagram const sphere = face_double(toy_r());
  CHECK(validate_diagram(sphere, toy_words()).ok());
  CHECK(sphere.contours.empty());
  auto const pairs = find_immediately_cancellable(sphere);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair{0, 1});
  CHECK(find_immediately_cancellable(one_face_disc(toy_r())).empty());

  Letters const  r = toy_r();
  DiagramBuilder mirrored;
  mirrored.add_face_at_vertex(0, 0, r);
  mirrored.add_face_along(0, 0, 1, inverse(r));
  CHECK(validate_diagram(mirrored.diagram(), toy_words()).ok());
  CHECK(find_immediately_cancellable(mirrored.diagram()).size() == 1);

  DiagramBuilder plain;
  plain.add_face_at_vertex(0, 0, r);
  plain.add_face_along(0, 0, 1, rotate_left(r, 5));
  CHECK(validate_diagram(plain.diagram(), toy_words()).ok());
  CHECK(find_immediately_cancellable(plain.diagram()).empty());
}

TEST_CASE("cancellable pairs agree with direct comparison on random diagrams") {
  std::mt19937_64 rng(22);
  auto const      S = toy_words();
  int             with_pairs = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Diagram const d    = random_diagram(rng, S, 3, {1, 6, 0.25, 0.15, 3});
    auto const    got  = find_immediately_cancellable(d);
    auto const    want = brute_cancellable(d);
    CHECK(std::set<std::pair<int, int>>(got.begin(), got.end()) == want);
    with_pairs += want.empty() ? 0 : 1;
  }
  CHECK(with_pairs > 0);
}

TEST_CASE("maximal arcs partition the edges") {
  std::mt19937_64 rng(23);
  auto const      S = toy_words();
  for (int trial = 0; trial < 200; ++trial) {
    Diagram const    d   = random_diagram(rng, S, 3, {0, 5, 0.3, 0.3, 3});
    std::vector<int> deg = d.degrees();
    std::vector<int> seen(static_cast<std::size_t>(d.edge_count()), 0);
    for (Cycle const& arc : maximal_arcs(d)) {
      REQUIRE_FALSE(arc.empty());
      bool const closed = d.darts[static_cast<std::size_t>(arc.back())].to
                          == d.darts[static_cast<std::size_t>(arc.front())].from;
      for (std::size_t k = 0; k < arc.size(); ++k) {
        int const e = arc[k];
        ++seen[static_cast<std::size_t>(std::min(e, d.darts[static_cast<std::size_t>(e)].inv) / 2)];
        if (k + 1 < arc.size()) {
          CHECK(d.darts[static_cast<std::size_t>(e)].to
                == d.darts[static_cast<std::size_t>(arc[k + 1])].from);
          CHECK(deg[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(e)].to)] == 2);
        }
      }
      if (!closed || deg[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(arc.front())].from)] != 2) {
        CHECK(deg[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(arc.front())].from)] != 2);
        CHECK(deg[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(arc.back())].to)] != 2);
      }
    }
    for (int c : seen) {
      CHECK(c == 1);
    }
  }
}

TEST_CASE("condition B on small faces") {
  Diagram const          d   = one_face_disc(toy_r());
  ConditionBReport const rep = check_condition_B(d, special_selection(d, 3), Rational(1, 15),
                                                 Rational(2, 3));
  REQUIRE(rep.faces.size() == 1);
  CHECK(rep.faces[0].b0);
  CHECK_FALSE(rep.faces[0].b1);
  CHECK(rep.faces[0].b2);
  CHECK(rep.faces[0].selected_length == 15);
  CHECK(rep.faces[0].b1_rhs == Rational(238, 15));
  CHECK_FALSE(rep.ok());

  Diagram const deg = degenerate_disc(Letters{1, 2});
  CHECK(check_condition_B(deg, Selection{}, Rational(1, 15), Rational(2, 3)).ok());

  Diagram const          sphere = face_double(toy_r());
  ConditionBReport const sb     = check_condition_B(sphere, special_selection(sphere, 3),
                                                    Rational(1, 15), Rational(2, 3));
  CHECK_FALSE(sb.ok());
  CHECK(sb.faces[0].longest_double_arc > 0);
}

TEST_CASE("maximal semisimple submaps") {
  auto const    S    = toy_words();
  Diagram const disc = one_face_disc(toy_r());
  auto const    one  = maximal_semisimple_submaps(disc);
  REQUIRE(one.size() == 1);
  CHECK(one[0].diagram.faces.size() == 1);
  CHECK(one[0].diagram.edge_count() == disc.edge_count());
  CHECK(is_semisimple(disc));

  DiagramBuilder b;
  b.add_face_at_vertex(0, 0, toy_r());
  b.add_spur(0, 0, 2);
  b.add_face_at_vertex(0, 1, toy_r());
  Diagram const bridged = b.diagram();
  CHECK(validate_diagram(bridged, S).ok());
  CHECK_FALSE(is_semisimple(bridged));
  auto const two = maximal_semisimple_submaps(bridged);
  REQUIRE(two.size() == 2);
  for (Submap const& s : two) {
    CHECK(s.diagram.faces.size() == 1);
    CHECK(validate_diagram(s.diagram, S).ok());
  }

  auto const points = maximal_semisimple_submaps(degenerate_disc(Letters{1, 2}));
  CHECK(points.size() == 3);
  for (Submap const& s : points) {
    CHECK(s.diagram.vertex_count == 1);
    CHECK(s.diagram.darts.empty());
  }
}

TEST_CASE("submaps split faces and selected edges exactly") {
  std::mt19937_64 rng(24);
  auto const      S = toy_words();
  for (int trial = 0; trial < 200; ++trial) {
    Diagram const   d   = random_diagram(rng, S, 3, {1, 6, 0.3, 0.35, 3});
    Selection const sel = special_selection(d, 3);
    DiagramMetrics const whole = metrics(d, sel);
    std::int64_t    faces = 0, s_sum = 0, sigma = 0;
    std::set<int>   face_ids;
    for (Submap const& sub : maximal_semisimple_submaps(d)) {
      CHECK(is_semisimple(sub.diagram));
      CHECK(validate_diagram(sub.diagram, S).ok());
      DiagramMetrics const m = metrics(sub.diagram, restrict_selection(sel, sub));
      faces += m.F;
      s_sum += m.S;
      sigma += m.Sigma;
      face_ids.insert(sub.face_map.begin(), sub.face_map.end());
    }
    CHECK(faces == whole.F);
    CHECK(face_ids.size() == d.faces.size());
    CHECK(s_sum == whole.S);
    CHECK(sigma == whole.Sigma);
  }
}

TEST_CASE("condition X") {
  Diagram const          d   = one_face_disc(toy_r());
  InequalityResult const x   = check_condition_X(d, special_selection(d, 3), Rational(51, 15));
  CHECK(x.holds);
  CHECK(x.metrics.S == 15);
  CHECK(x.metrics.E == 17);
  CHECK(x.metrics.Sigma == 17);
  CHECK(x.lhs == 15);
  CHECK(x.rhs == 17 - Rational(51, 15) * 17);

  Diagram point;
  point.vertex_count = 1;
  point.contours.emplace_back();
  InequalityResult const p = check_condition_X(point, Selection{}, Rational(1, 3));
  CHECK(p.holds);
  CHECK(p.lhs == 0);
  CHECK(p.rhs == 0);

  CHECK_THROWS_AS((void)check_condition_X(degenerate_disc(Letters{1}), Selection{}, Rational(1, 3)),
                  PreconditionViolation);

  Diagram const          sphere = face_double(toy_r());
  InequalityResult const sx = check_condition_X(sphere, special_selection(sphere, 3), Rational(1, 3));
  CHECK(sx.metrics.S == 0);
  CHECK_FALSE(sx.holds);
}

TEST_CASE("main lemma on the theorem-scale face") {
  Presentation const   P   = theorem_presentation();
  Diagram const        d   = one_face_disc(P.relators[0].r.letters());
  Selection const      sel = special_selection(d, 63);
  InequalityResult const r = check_main_lemma(d, sel, Rational(1, 315), Rational(2, 63));
  CHECK(r.holds);
  CHECK(r.lhs == 63 * 631);
  Rational const mu = Rational(1, 315) + 5 * Rational(2, 63);
  CHECK(r.rhs == (1 - 2 * mu) * (63 * 631 + 2));

  Diagram point;
  point.vertex_count = 1;
  point.contours.emplace_back();
  InequalityResult const z = check_main_lemma(point, Selection{}, Rational(1, 315), Rational(2, 63));
  CHECK(z.holds);
  CHECK(z.lhs == 0);

  CHECK_THROWS_AS((void)check_main_lemma(one_face_disc(toy_r()), special_selection(one_face_disc(toy_r()), 3),
                                         Rational(1, 15), Rational(2, 3)),
                  PreconditionViolation);
  Diagram many = d;
  many.contours.resize(4);
  CHECK_THROWS_AS((void)check_main_lemma(many, sel, Rational(1, 315), Rational(2, 63)),
                  PreconditionViolation);
}

TEST_CASE("letter budget") {
  Diagram const   d   = one_face_disc(toy_r());
  Selection const sel = special_selection(d, 3);
  std::vector<int> const x1{1};
  InequalityResult const one = check_letter_budget(d, sel, x1, 3);
  CHECK(one.holds);
  CHECK(one.lhs == 5);
  CHECK(one.rhs == Rational(17, 3));
  std::vector<int> const all{1, 2, 3};
  InequalityResult const every = check_letter_budget(d, sel, all, 3);
  CHECK(every.holds);
  CHECK(every.lhs == 15);
  CHECK(every.rhs == 17);
  CHECK_THROWS_AS((void)check_letter_budget(d, sel, std::vector<int>{}, 3), PreconditionViolation);
  CHECK_THROWS_AS((void)check_letter_budget(degenerate_disc(Letters{1}), Selection{}, x1, 3),
                  PreconditionViolation);
  CHECK_THROWS_AS((void)check_letter_budget(d, sel, std::vector<int>{4}, 3), PreconditionViolation);
}

TEST_CASE("random diagrams validate and mutations are caught") {
  std::mt19937_64 rng(25);
  auto const      S = toy_words();
  for (int trial = 0; trial < 300; ++trial) {
    Diagram const d = random_diagram(rng, S, 3);
    REQUIRE(validate_diagram(d, S).ok());
    CHECK(validate_diagram(mirror_copy(d), S).ok());
    CHECK(mirror_copy(mirror_copy(d)) == d);
    CHECK(special_selection(mirror_copy(d), 3) == mirror_selection(d, special_selection(d, 3)));
    CHECK(special_selection(d, 3) == scanned_selection(d, 3));

    Mutation const inv = break_involution(d, rng);
    DiagramReport const ri = validate_diagram(inv.d, S);
    CHECK(ri.has("involution"));
    bool located = false;
    for (DiagramIssue const& i : ri.issues) {
      located = located || i.where == "dart " + std::to_string(inv.dart);
    }
    CHECK(located);

    Mutation const dup = duplicate_dart(d, rng);
    DiagramReport const rd = validate_diagram(dup.d, S);
    bool repeated = false;
    for (DiagramIssue const& i : rd.issues) {
      repeated = repeated || (i.code == "dart-repeated" && i.where == "dart " + std::to_string(dup.dart));
    }
    CHECK(repeated);
  }
}
