#ifndef FILEBASIS_DIAGRAM_HPP_
#define FILEBASIS_DIAGRAM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "filebasis/construction.hpp"
#include "filebasis/rational.hpp"
#include "filebasis/words.hpp"

namespace filebasis {

  //! Oriented edge. Darts are addressed by their index in Diagram::darts.
  struct Dart {
    int    inv   = -1;
    int    from  = -1;
    int    to    = -1;
    Letter label = 0;

    bool operator==(Dart const&) const = default;
  };

  using Cycle = std::vector<int>;

  //! A map with labelled darts: face boundary cycles and map contours are
  //! cyclic dart sequences. Vertices are 0 .. vertex_count - 1.
  struct Diagram {
    int                vertex_count = 0;
    std::vector<Dart>  darts;
    std::vector<Cycle> faces;
    std::vector<Cycle> contours;

    bool operator==(Diagram const&) const = default;

    [[nodiscard]] std::int64_t edge_count() const noexcept {
      return static_cast<std::int64_t>(darts.size() / 2);
    }
    [[nodiscard]] Letters label(Cycle const& path) const;
    [[nodiscard]] Letters face_label(std::size_t f) const {
      return label(faces[f]);
    }
    //! Incident edges with loops counted twice.
    [[nodiscard]] std::vector<int> degrees() const;
  };

  //! Where each dart sits: on a face boundary or on a contour, and at which
  //! position of that cycle. -1 when absent.
  struct Incidence {
    std::vector<int>          face_of;
    std::vector<int>          contour_of;
    std::vector<std::int64_t> position;

    explicit Incidence(Diagram const& d);

    [[nodiscard]] bool internal(Diagram const& d, int dart) const {
      return face_of[static_cast<std::size_t>(dart)] >= 0
             && face_of[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(dart)].inv)]
                    >= 0;
    }
  };

  //! One face bounded by \p label, contour reading label^-1.
  [[nodiscard]] Diagram one_face_disc(std::span<Letter const> label);
  //! A map without faces: a path reading \p label and back again.
  [[nodiscard]] Diagram degenerate_disc(std::span<Letter const> label);
  //! Two faces glued along their whole boundary: \p label and its mirror.
  [[nodiscard]] Diagram face_double(std::span<Letter const> label);

  struct DiagramIssue {
    std::string code;
    std::string where;
  };

  //! Face f reads rotate_left(word(relator, sign), rotation).
  struct FaceMatch {
    int          face     = 0;
    int          relator  = -1;  // index into the relator list
    int          sign     = 1;
    std::int64_t rotation = 0;
  };

  struct DiagramReport {
    std::vector<DiagramIssue> issues;
    std::vector<FaceMatch>    matches;
    std::int64_t              euler = 0;  // V - E + F + contours

    [[nodiscard]] bool ok() const noexcept {
      return issues.empty();
    }
    [[nodiscard]] bool has(std::string_view code) const;
  };

  //! Structural invariants of the dart complex, the face/contour partition,
  //! connectivity, the Euler count V - E + F + C = 2, and that every face
  //! label is a rotation of some relator or its inverse.
  [[nodiscard]] DiagramReport validate_diagram(Diagram const&             d,
                                               std::span<PowerWord const> relators);

  //! The maximal selected subpath of one face boundary: darts
  //! face[start], ..., face[start + length - 1] (indices mod |face|).
  struct SelectedPath {
    int          face   = 0;
    std::int64_t start  = 0;
    std::int64_t length = 0;
    //! +1 for x_1^m ... x_n^m, -1 for x_n^-m ... x_1^-m, 0 otherwise.
    int          direction = 0;
    std::int64_t m         = 0;

    bool operator==(SelectedPath const&) const = default;
  };

  struct Selection {
    std::vector<SelectedPath> paths;

    bool operator==(Selection const&) const = default;

    //! Paths whose face is \p f.
    [[nodiscard]] std::vector<SelectedPath> on_face(int f) const;
  };

  //! Offset of \p dart inside the selected path of its face, or -1.
  [[nodiscard]] std::int64_t selected_offset(Diagram const&   d,
                                             Incidence const& inc,
                                             Selection const& sel,
                                             int              dart);

  //! Every subpath s of a face boundary with label x_1^m ... x_n^m or
  //! x_n^-m ... x_1^-m and |s| (2n - 2) > n |face|, per face.
  [[nodiscard]] std::vector<std::vector<SelectedPath>>
  special_candidates(Diagram const& d, int n);

  //! The unique special selection. Throws NoSelection when some face has
  //! no candidate (or more than one), and for n < 3.
  [[nodiscard]] Selection special_selection(Diagram const& d, int n);

  //! Index i of the relator r_i with face label a rotation of r_i^{+-1}.
  //! Throws PreconditionViolation when there is none.
  [[nodiscard]] std::int64_t face_rank(Diagram const&      d,
                                       std::size_t         face,
                                       Presentation const& p);

  //! Unordered pairs {f1 < f2} of immediately cancellable faces.
  [[nodiscard]] std::vector<std::pair<int, int>>
  find_immediately_cancellable(Diagram const& d);

  //! Maximal paths whose intermediate vertices have degree 2, one
  //! orientation per edge set. Closed arcs cover cycles of degree-2 vertices.
  [[nodiscard]] std::vector<Cycle> maximal_arcs(Diagram const& d);

  struct FaceConditionB {
    int          face = 0;
    bool         b0   = false;
    bool         b1   = false;
    bool         b2   = false;
    std::int64_t selected_length       = 0;
    std::int64_t perimeter             = 0;
    std::int64_t longest_double_arc    = 0;
    Rational     b1_rhs;  // (1 - lambda1) |face|
    Rational     b2_rhs;  // lambda2 |face|
  };

  struct ConditionBReport {
    std::vector<FaceConditionB> faces;

    [[nodiscard]] bool ok() const;
  };

  [[nodiscard]] ConditionBReport check_condition_B(Diagram const&   d,
                                                   Selection const& sel,
                                                   Rational const&  lambda1,
                                                   Rational const&  lambda2);

  struct DiagramMetrics {
    std::int64_t S     = 0;  // selected external edges
    std::int64_t Sigma = 0;  // sum of face perimeters
    std::int64_t E     = 0;  // edges
    std::int64_t F     = 0;  // faces
  };

  [[nodiscard]] DiagramMetrics metrics(Diagram const& d, Selection const& sel);

  [[nodiscard]] bool is_semisimple(Diagram const& d);

  //! A submap with the original indices of its vertices, darts and faces.
  struct Submap {
    Diagram          diagram;
    std::vector<int> vertex_map;
    std::vector<int> dart_map;
    std::vector<int> face_map;
  };

  //! Components left after deleting every edge with no face on either side.
  [[nodiscard]] std::vector<Submap> maximal_semisimple_submaps(Diagram const& d);

  //! The selection restricted to a submap, reindexed.
  [[nodiscard]] Selection restrict_selection(Selection const& sel, Submap const& sub);

  struct InequalityResult {
    bool           holds = false;
    Rational       lhs;
    Rational       rhs;
    DiagramMetrics metrics;
  };

  //! S >= E - mu Sigma. Throws PreconditionViolation unless semisimple.
  [[nodiscard]] InequalityResult check_condition_X(Diagram const&   d,
                                                   Selection const& sel,
                                                   Rational const&  mu);

  //! S >= (1 - 2 mu) Sigma with mu = lambda1 + 5 lambda2. Throws
  //! PreconditionViolation for more than 3 contours, 2 lambda1 + 13 lambda2
  //! >= 1, or a selection failing condition B.
  [[nodiscard]] InequalityResult check_main_lemma(Diagram const&   d,
                                                  Selection const& sel,
                                                  Rational const&  lambda1,
                                                  Rational const&  lambda2);

  //! Selected external edges labelled by a letter of \p letters, against
  //! (k/n) Sigma with k = |letters|; strict.
  [[nodiscard]] InequalityResult check_letter_budget(Diagram const&        d,
                                                     Selection const&      sel,
                                                     std::span<int const> letters,
                                                     int                   n);

  //! Same complex with every face boundary and contour reversed.
  [[nodiscard]] Diagram mirror_copy(Diagram const& d);
  //! The selection carried to the mirror copy.
  [[nodiscard]] Selection mirror_selection(Diagram const& d, Selection const& sel);

}  // namespace filebasis

#endif  // FILEBASIS_DIAGRAM_HPP_
