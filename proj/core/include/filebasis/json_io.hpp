#ifndef FILEBASIS_JSON_IO_HPP_
#define FILEBASIS_JSON_IO_HPP_

#include "json.hpp"

#include "filebasis/construction.hpp"
#include "filebasis/decision.hpp"
#include "filebasis/diagram.hpp"

namespace filebasis {

  using Json = nlohmann::ordered_json;

  [[nodiscard]] Json to_json(InequalityCheck const& c);
  [[nodiscard]] Json to_json(ParamsReport const& r);
  [[nodiscard]] Json to_json(ConstructionParams const& p);

  //! { "n", "lambda1", "N", "relators": [{ "i", "w", "m", "r" }] } plus "q"
  //! when overridden.
  [[nodiscard]] Json to_json(Presentation const& p);
  [[nodiscard]] Json to_json(GenerateResult const& g);

  //! Throws MalformedInput on missing fields, bad words or bad rationals,
  //! and MalformedParams on out-of-range parameters.
  [[nodiscard]] Presentation presentation_from_json(Json const& j);

  //! { "vertices", "darts": [{ "id", "inv", "from", "to", "label" }],
  //!   "faces": [{ "id", "cycle" }], "contours": [[...]] }
  [[nodiscard]] Json    to_json(Diagram const& d);
  //! Ids may be arbitrary integers; they are mapped to dense indices in
  //! order of appearance. Throws MalformedInput.
  [[nodiscard]] Diagram diagram_from_json(Json const& j);

  [[nodiscard]] Json to_json(DiagramReport const& r);
  [[nodiscard]] Json to_json(Selection const& s);
  [[nodiscard]] Json to_json(ConditionBReport const& r);
  [[nodiscard]] Json to_json(InequalityResult const& r);
  [[nodiscard]] Json to_json(Witness const& w);
  [[nodiscard]] Json to_json(Outcome const& o);
  [[nodiscard]] Json to_json(NormalFormResult const& r);

}  // namespace filebasis

#endif  // FILEBASIS_JSON_IO_HPP_
