#include "random_diagrams.hpp"

#include <algorithm>
#include <stdexcept>

namespace filebasis::testing {

  DiagramBuilder::DiagramBuilder() {
    d_.vertex_count = 1;
    d_.contours.emplace_back();
  }

  DiagramBuilder DiagramBuilder::annulus(std::span<Letter const> label) {
    if (label.empty()) {
      throw std::invalid_argument("annulus needs at least one edge");
    }
    DiagramBuilder b;
    b.d_.contours.clear();
    int const k       = static_cast<int>(label.size());
    b.d_.vertex_count = k;
    Cycle outer;
    for (int i = 0; i < k; ++i) {
      outer.push_back(b.add_edge(i, (i + 1) % k, label[static_cast<std::size_t>(i)]));
    }
    Cycle inner;
    for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
      inner.push_back(*it + 1);
    }
    b.d_.contours.push_back(outer);
    b.d_.contours.push_back(inner);
    return b;
  }

  int DiagramBuilder::add_vertex() {
    return d_.vertex_count++;
  }

  int DiagramBuilder::add_edge(int from, int to, Letter label) {
    int const k = static_cast<int>(d_.darts.size());
    d_.darts.push_back({k + 1, from, to, label});
    d_.darts.push_back({k, to, from, -label});
    return k;
  }

  int DiagramBuilder::anchor(std::size_t c, std::size_t j) const {
    Cycle const& cyc = d_.contours.at(c);
    if (cyc.empty()) {
      return 0;
    }
    return d_.darts[static_cast<std::size_t>(cyc[j % cyc.size()])].from;
  }

  Cycle DiagramBuilder::add_path(int from, int to, std::span<Letter const> labels) {
    Cycle path;
    int   at = from;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      int const next = i + 1 == labels.size() ? to : add_vertex();
      path.push_back(add_edge(at, next, labels[i]));
      at = next;
    }
    return path;
  }

  void DiagramBuilder::add_face_at_vertex(std::size_t c, std::size_t j, std::span<Letter const> rho) {
    int const   v    = anchor(c, j);
    Cycle const face = add_path(v, v, rho);
    Cycle&      cyc  = d_.contours[c];
    Cycle       back;
    for (auto it = face.rbegin(); it != face.rend(); ++it) {
      back.push_back(*it + 1);
    }
    std::size_t const at = cyc.empty() ? 0 : j % cyc.size();
    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(at), back.begin(), back.end());
    d_.faces.push_back(face);
  }

  void DiagramBuilder::add_face_along(std::size_t             c,
                                      std::size_t             j,
                                      std::size_t             t,
                                      std::span<Letter const> rho) {
    Cycle& cyc = d_.contours.at(c);
    if (t == 0 || t >= rho.size() || t > cyc.size()) {
      throw std::invalid_argument("bad segment length");
    }
    std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(j % cyc.size()), cyc.end());
    Cycle face(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(t));
    for (std::size_t i = 0; i < t; ++i) {
      if (d_.darts[static_cast<std::size_t>(face[i])].label != rho[i]) {
        throw std::invalid_argument("segment label does not match");
      }
    }
    int const   from  = d_.darts[static_cast<std::size_t>(face.back())].to;
    int const   to    = d_.darts[static_cast<std::size_t>(face.front())].from;
    Cycle const fresh = add_path(from, to, rho.subspan(t));
    Cycle&      cyc2  = d_.contours[c];
    Cycle       rest(cyc2.begin() + static_cast<std::ptrdiff_t>(t), cyc2.end());
    cyc2.clear();
    for (auto it = fresh.rbegin(); it != fresh.rend(); ++it) {
      cyc2.push_back(*it + 1);
    }
    cyc2.insert(cyc2.end(), rest.begin(), rest.end());
    face.insert(face.end(), fresh.begin(), fresh.end());
    d_.faces.push_back(face);
  }

  void DiagramBuilder::add_spur(std::size_t c, std::size_t j, Letter label) {
    int const v = anchor(c, j);
    int const u = add_vertex();
    int const e = add_edge(v, u, label);
    Cycle&    cyc = d_.contours[c];
    std::size_t const at = cyc.empty() ? 0 : j % cyc.size();
    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(at), {e, e + 1});
  }

  std::vector<Letters> relator_rotations(std::span<PowerWord const> relators) {
    std::vector<Letters> out;
    for (PowerWord const& r : relators) {
      Letters const fwd = r.letters();
      for (Letters const& w : {fwd, inverse(fwd)}) {
        for (std::size_t k = 0; k < w.size(); ++k) {
          out.push_back(rotate_left(w, k));
        }
      }
    }
    return out;
  }

  namespace {
    Letter random_letter(std::mt19937_64& rng, int n) {
      std::uniform_int_distribution<int> pick(1, n);
      Letter const                       x = pick(rng);
      return std::bernoulli_distribution(0.5)(rng) ? x : -x;
    }

    std::size_t below(std::mt19937_64& rng, std::size_t k) {
      return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    }
  }  // namespace

  Diagram random_diagram(std::mt19937_64&            rng,
                         std::span<PowerWord const>  relators,
                         int                         n,
                         RandomDiagramOptions const& opts) {
    std::vector<Letters> const rotations = relator_rotations(relators);
    DiagramBuilder             b;
    if (std::bernoulli_distribution(opts.annulus_chance)(rng)) {
      Letters label(1 + below(rng, 4));
      for (Letter& x : label) {
        x = random_letter(rng, n);
      }
      b = DiagramBuilder::annulus(label);
    }
    int const faces
        = std::uniform_int_distribution<int>(opts.min_faces, opts.max_faces)(rng);
    while (static_cast<int>(b.diagram().faces.size()) < faces) {
      std::size_t const c   = below(rng, b.diagram().contours.size());
      Cycle const&      cyc = b.diagram().contours[c];
      std::size_t const j   = cyc.empty() ? 0 : below(rng, cyc.size());
      if (std::bernoulli_distribution(opts.spur_chance)(rng)) {
        b.add_spur(c, j, random_letter(rng, n));
        continue;
      }
      std::size_t const t = cyc.empty() ? 0 : below(rng, std::min(opts.max_shared, cyc.size()) + 1);
      if (t > 0) {
        Letters seg;
        for (std::size_t i = 0; i < t; ++i) {
          seg.push_back(b.diagram().darts[static_cast<std::size_t>(cyc[(j + i) % cyc.size()])].label);
        }
        std::vector<Letters const*> fits;
        for (Letters const& rho : rotations) {
          if (rho.size() > t && std::equal(seg.begin(), seg.end(), rho.begin())) {
            fits.push_back(&rho);
          }
        }
        if (!fits.empty()) {
          b.add_face_along(c, j, t, *fits[below(rng, fits.size())]);
          continue;
        }
      }
      b.add_face_at_vertex(c, j, rotations[below(rng, rotations.size())]);
    }
    return b.diagram();
  }

  Mutation break_involution(Diagram d, std::mt19937_64& rng) {
    if (d.darts.size() < 3) {
      throw std::invalid_argument("need at least two edges");
    }
    int const k = static_cast<int>(below(rng, d.darts.size()));
    int       j = k;
    while (j == k || j == d.darts[static_cast<std::size_t>(k)].inv) {
      j = static_cast<int>(below(rng, d.darts.size()));
    }
    d.darts[static_cast<std::size_t>(k)].inv = j;
    return {std::move(d), k};
  }

  Mutation duplicate_dart(Diagram d, std::mt19937_64& rng) {
    if (d.faces.empty() || d.contours.empty()) {
      throw std::invalid_argument("need a face and a contour");
    }
    Cycle const& f = d.faces[below(rng, d.faces.size())];
    int const    k = f[below(rng, f.size())];
    d.contours[below(rng, d.contours.size())].push_back(k);
    return {std::move(d), k};
  }

}  // namespace filebasis::testing
