#include "filebasis/json_io.hpp"

#include <unordered_map>

#include "filebasis/errors.hpp"

namespace filebasis {

  namespace {
    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw MalformedInput(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    std::int64_t integer_field(Json const& j, char const* key) {
      Json const& v = field(j, key);
      if (!v.is_number_integer()) {
        throw MalformedInput(std::string("field \"") + key + "\" must be an integer");
      }
      return v.get<std::int64_t>();
    }

    std::string string_field(Json const& j, char const* key) {
      Json const& v = field(j, key);
      if (!v.is_string()) {
        throw MalformedInput(std::string("field \"") + key + "\" must be a string");
      }
      return v.get<std::string>();
    }

    Rational rational_field(Json const& j, char const* key) {
      Json const& v = field(j, key);
      if (v.is_number_integer()) {
        return Rational(v.get<std::int64_t>());
      }
      if (!v.is_string()) {
        throw MalformedInput(std::string("field \"") + key + "\" must be a rational string");
      }
      return parse_rational(v.get<std::string>());
    }

    Json word_array(std::vector<PowerWord> const& ws) {
      Json a = Json::array();
      for (PowerWord const& w : ws) {
        a.push_back(to_string(w));
      }
      return a;
    }
  }  // namespace

  Json to_json(InequalityCheck const& c) {
    return {{"name", c.name},
            {"relation", c.relation},
            {"lhs", to_string(c.lhs)},
            {"rhs", to_string(c.rhs)},
            {"holds", c.holds},
            {"required", c.required}};
  }

  Json to_json(ParamsReport const& r) {
    Json checks = Json::array();
    for (InequalityCheck const& c : r.checks) {
      checks.push_back(to_json(c));
    }
    return {{"ok", r.ok()}, {"theorem_scale", r.theorem_scale}, {"checks", checks}};
  }

  Json to_json(ConstructionParams const& p) {
    Json j = {{"n", p.n}, {"lambda1", to_string(p.lambda1)}, {"N", p.N}};
    j["lambda2"] = to_string(p.lambda2());
    j["mu"]      = to_string(p.mu());
    auto const q = p.q();
    j["q"]       = q ? Json(to_string(*q)) : Json(nullptr);
    return j;
  }

  Json to_json(Presentation const& p) {
    Json j = {{"n", p.params.n}, {"lambda1", to_string(p.params.lambda1)}, {"N", p.params.N}};
    if (p.params.q_override) {
      j["q"] = to_string(*p.params.q_override);
    }
    Json rels = Json::array();
    for (Relator const& r : p.relators) {
      rels.push_back({{"i", r.i}, {"w", to_string(r.w)}, {"m", r.m}, {"r", to_string(r.r)}});
    }
    j["relators"] = std::move(rels);
    return j;
  }

  Json to_json(GenerateResult const& g) {
    Json j         = to_json(g.presentation);
    j["truncated"] = g.truncated;
    if (g.truncated) {
      j["reason"] = g.reason;
    }
    if (!g.warnings.empty()) {
      j["warnings"] = g.warnings;
    }
    return j;
  }

  Presentation presentation_from_json(Json const& j) {
    Presentation p;
    std::int64_t const n = integer_field(j, "n");
    if (n < 1 || n > 1'000'000) {
      throw MalformedParams("n out of range");
    }
    p.params.n       = static_cast<int>(n);
    p.params.lambda1 = rational_field(j, "lambda1");
    p.params.N       = integer_field(j, "N");
    if (p.params.N < 1) {
      throw MalformedParams("N must be positive");
    }
    if (p.params.lambda1 <= 0 || p.params.lambda1 >= 1) {
      throw MalformedParams("lambda1 must lie in (0, 1)");
    }
    if (j.contains("q") && !j.at("q").is_null()) {
      p.params.q_override = rational_field(j, "q");
    }
    Json const& rels = field(j, "relators");
    if (!rels.is_array()) {
      throw MalformedInput("\"relators\" must be an array");
    }
    Alphabet const alphabet{p.params.n};
    for (Json const& r : rels) {
      Relator rel;
      rel.i = integer_field(r, "i");
      rel.w = parse_word(string_field(r, "w"), alphabet);
      rel.m = integer_field(r, "m");
      rel.r = parse_word(string_field(r, "r"), alphabet);
      p.relators.push_back(std::move(rel));
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagrams
  ////////////////////////////////////////////////////////////////////////

  Json to_json(Diagram const& d) {
    Json vertices = Json::array();
    for (int v = 0; v < d.vertex_count; ++v) {
      vertices.push_back(v);
    }
    Json darts = Json::array();
    for (std::size_t k = 0; k < d.darts.size(); ++k) {
      Dart const& e = d.darts[k];
      darts.push_back({{"id", k},
                       {"inv", e.inv},
                       {"from", e.from},
                       {"to", e.to},
                       {"label", to_string(PowerWord::from_letters(Letters{e.label}))}});
    }
    Json faces = Json::array();
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      faces.push_back({{"id", f}, {"cycle", d.faces[f]}});
    }
    Json contours = Json::array();
    for (Cycle const& c : d.contours) {
      contours.push_back(c);
    }
    return {{"vertices", vertices}, {"darts", darts}, {"faces", faces}, {"contours", contours}};
  }

  namespace {
    class IdMap {
     public:
      explicit IdMap(char const* what) : what_(what) {}

      int add(Json const& id) {
        std::int64_t const key = id_value(id);
        auto [it, fresh]       = map_.emplace(key, static_cast<int>(map_.size()));
        if (!fresh) {
          throw MalformedInput(std::string("duplicate ") + what_ + " id " + std::to_string(key));
        }
        return it->second;
      }

      int at(Json const& id) const {
        std::int64_t const key = id_value(id);
        auto const         it  = map_.find(key);
        if (it == map_.end()) {
          throw MalformedInput(std::string("unknown ") + what_ + " id " + std::to_string(key));
        }
        return it->second;
      }

     private:
      std::int64_t id_value(Json const& id) const {
        if (!id.is_number_integer()) {
          throw MalformedInput(std::string(what_) + " ids must be integers");
        }
        return id.get<std::int64_t>();
      }

      char const*                                   what_;
      std::unordered_map<std::int64_t, int>         map_;
    };

    Letter parse_label(Json const& v) {
      if (!v.is_string()) {
        throw MalformedInput("dart labels must be strings like \"x2^-1\"");
      }
      Letters const l = parse_word(v.get<std::string>()).letters();
      if (l.size() != 1) {
        throw MalformedInput("dart label must be a single group letter: " + v.get<std::string>());
      }
      return l.front();
    }
  }  // namespace

  Diagram diagram_from_json(Json const& j) {
    Diagram d;
    IdMap   vertices("vertex");
    IdMap   darts("dart");
    Json const& vs = field(j, "vertices");
    Json const& ds = field(j, "darts");
    Json const& fs = field(j, "faces");
    Json const& cs = field(j, "contours");
    if (!vs.is_array() || !ds.is_array() || !fs.is_array() || !cs.is_array()) {
      throw MalformedInput("vertices, darts, faces and contours must be arrays");
    }
    for (Json const& v : vs) {
      vertices.add(v.is_object() ? field(v, "id") : v);
    }
    d.vertex_count = static_cast<int>(vs.size());
    for (Json const& e : ds) {
      darts.add(field(e, "id"));
    }
    for (Json const& e : ds) {
      Dart x;
      x.inv   = darts.at(field(e, "inv"));
      x.from  = vertices.at(field(e, "from"));
      x.to    = vertices.at(field(e, "to"));
      x.label = parse_label(field(e, "label"));
      d.darts.push_back(x);
    }
    auto read_cycle = [&](Json const& c) {
      if (!c.is_array()) {
        throw MalformedInput("cycles must be arrays of dart ids");
      }
      Cycle out;
      for (Json const& id : c) {
        out.push_back(darts.at(id));
      }
      return out;
    };
    IdMap face_ids("face");
    for (Json const& f : fs) {
      face_ids.add(field(f, "id"));
      d.faces.push_back(read_cycle(field(f, "cycle")));
    }
    for (Json const& c : cs) {
      d.contours.push_back(read_cycle(c));
    }
    return d;
  }

  Json to_json(DiagramReport const& r) {
    Json issues = Json::array();
    for (DiagramIssue const& i : r.issues) {
      issues.push_back({{"code", i.code}, {"where", i.where}});
    }
    Json matches = Json::array();
    for (FaceMatch const& m : r.matches) {
      matches.push_back({{"face", m.face},
                         {"relator", m.relator},
                         {"sign", m.sign},
                         {"rotation", m.rotation}});
    }
    return {{"ok", r.ok()}, {"euler", r.euler}, {"issues", issues}, {"matches", matches}};
  }

  Json to_json(Selection const& s) {
    Json a = Json::array();
    for (SelectedPath const& p : s.paths) {
      a.push_back({{"face", p.face},
                   {"start", p.start},
                   {"length", p.length},
                   {"direction", p.direction},
                   {"m", p.m}});
    }
    return a;
  }

  Json to_json(ConditionBReport const& r) {
    Json faces = Json::array();
    for (FaceConditionB const& f : r.faces) {
      faces.push_back({{"face", f.face},
                       {"B0", f.b0},
                       {"B1", f.b1},
                       {"B2", f.b2},
                       {"selected_length", f.selected_length},
                       {"perimeter", f.perimeter},
                       {"B1_rhs", to_string(f.b1_rhs)},
                       {"longest_double_selected_arc", f.longest_double_arc},
                       {"B2_rhs", to_string(f.b2_rhs)}});
    }
    return {{"ok", r.ok()}, {"faces", faces}};
  }

  Json to_json(InequalityResult const& r) {
    return {{"holds", r.holds},
            {"lhs", to_string(r.lhs)},
            {"rhs", to_string(r.rhs)},
            {"S", r.metrics.S},
            {"Sigma", r.metrics.Sigma},
            {"E", r.metrics.E},
            {"F", r.metrics.F}};
  }

  Json to_json(Witness const& w) {
    Json j = {{"kind", std::string(to_string(w.kind))}, {"engine", w.engine}};
    if (!w.product.empty()) {
      Json prod = Json::array();
      for (Conjugate const& c : w.product) {
        prod.push_back({{"conjugator", to_string(c.conjugator)},
                        {"relator", to_string(c.relator)}});
      }
      j["product"] = std::move(prod);
    }
    if (!w.trace.empty()) {
      j["trace"] = word_array(w.trace);
    }
    if (w.conjugator) {
      j["conjugator"] = to_string(*w.conjugator);
    }
    if (!w.abelian_difference.empty()) {
      j["abelian_difference"] = w.abelian_difference;
    }
    if (w.diagram_edges > 0) {
      j["diagram_edges"] = w.diagram_edges;
    }
    j["states"] = w.states;
    return j;
  }

  Json to_json(Outcome const& o) {
    Json j = {{"answer", std::string(to_string(o.value))}, {"witness", to_json(o.witness)}};
    if (!o.note.empty()) {
      j["note"] = o.note;
    }
    return j;
  }

  Json to_json(NormalFormResult const& r) {
    Json j = to_json(r.outcome);
    if (r.outcome.value == Verdict::yes) {
      j["normal_form"] = to_string(r.normal_form);
    }
    j["candidates"]        = r.candidates;
    j["undecided_smaller"] = r.undecided_smaller;
    j["bound_truncated"]   = r.bound_truncated;
    if (r.second_accepted) {
      j["second_accepted"] = to_string(*r.second_accepted);
    }
    return j;
  }

}  // namespace filebasis
