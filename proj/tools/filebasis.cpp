// filebasis: command-line front end.
//
// Exit codes: 0 yes/ok, 1 no/fail, 2 budget exceeded, 64 usage, 65 data.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "filebasis/construction.hpp"
#include "filebasis/decision.hpp"
#include "filebasis/diagram.hpp"
#include "filebasis/errors.hpp"
#include "filebasis/json_io.hpp"

using namespace filebasis;

namespace {

  constexpr int exit_yes    = 0;
  constexpr int exit_no     = 1;
  constexpr int exit_budget = 2;
  constexpr int exit_usage  = 64;
  constexpr int exit_data   = 65;

  // Errors in command-line values, as opposed to file contents.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  struct ParamArgs {
    int                        n = 0;
    std::string                lambda1;
    std::optional<std::int64_t> N;
    std::string                q;

    ConstructionParams resolve() const {
      ConstructionParams p;
      p.n = n;
      try {
        p.lambda1 = parse_rational(lambda1);
        if (!q.empty()) {
          p.q_override = parse_rational(q);
        }
      } catch (MalformedInput const& e) {
        throw UsageError(e.what());
      }
      if (p.n < 1 || p.lambda1 <= 0 || p.lambda1 >= 1) {
        throw UsageError("need n >= 1 and 0 < lambda1 < 1");
      }
      if (N) {
        p.N = *N;
      } else {
        // least N with lambda1 n N >= 1
        Rational const need = 1 / (p.lambda1 * p.n);
        Integer        c    = numerator(need) / denominator(need);
        if (c * denominator(need) < numerator(need)) {
          ++c;
        }
        p.N = static_cast<std::int64_t>(c);
      }
      if (p.N < 1) {
        throw UsageError("N must be positive");
      }
      return p;
    }
  };

  struct BudgetArgs {
    Budget      budget;
    std::string engine = "both";

    void add_to(CLI::App* app, bool with_engine) {
      app->add_option("--max-edges", budget.max_edges, "Diagram edge cap")->capture_default_str();
      app->add_option("--max-len", budget.max_word_len, "Word length cap for searches")
          ->capture_default_str();
      app->add_option("--max-states", budget.max_states, "Visited-state cap per search")
          ->capture_default_str();
      if (with_engine) {
        app->add_option("--engine", engine, "diagram | rewrite | both")
            ->check(CLI::IsMember({"diagram", "rewrite", "both"}))
            ->capture_default_str();
      }
    }

    Budget resolved() const {
      Budget b = budget;
      if (char const* mem = std::getenv("FILEBASIS_MAX_MEM")) {
        // soft cap: roughly 256 bytes per stored state
        char*                    end = nullptr;
        unsigned long long const v   = std::strtoull(mem, &end, 10);
        if (end != mem && v > 0) {
          b.max_states = std::min<std::int64_t>(
              b.max_states, std::max<std::int64_t>(1, static_cast<std::int64_t>(v / 256)));
        }
      }
      if (!b.valid()) {
        throw UsageError("budget caps must be positive");
      }
      return b;
    }

    Engine resolved_engine() const {
      return engine == "diagram" ? Engine::diagram : engine == "rewrite" ? Engine::rewrite : Engine::both;
    }
  };

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw MalformedInput("cannot open " + path);
    }
    try {
      return Json::parse(in);
    } catch (Json::exception const& e) {
      throw MalformedInput(path + ": " + e.what());
    }
  }

  PowerWord word_arg(std::string const& text, int n) {
    try {
      return parse_word(text, Alphabet{n});
    } catch (MalformedInput const& e) {
      throw UsageError(e.what());
    }
  }

  int verdict_exit(Verdict v) {
    switch (v) {
      case Verdict::yes:
        return exit_yes;
      case Verdict::no:
        return exit_no;
      case Verdict::budget_exceeded:
        return exit_budget;
    }
    return exit_budget;
  }

  Json budget_json(Budget const& b) {
    return {{"max_edges", b.max_edges}, {"max_len", b.max_word_len}, {"max_states", b.max_states}};
  }

  void emit(Json const& j) {
    std::cout << j.dump(2) << '\n';
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recursive presentations with a regular file basis: generation, "
               "diagram checks and bounded decision procedures.\n"
               "Exit codes: 0 yes/ok, 1 no/fail, 2 budget exceeded, 64 usage, 65 data.\n"
               "FILEBASIS_MAX_MEM (bytes) lowers --max-states as a soft memory cap."};
  app.require_subcommand(1);

  // validate
  ParamArgs val_params;
  auto*     validate = app.add_subcommand("validate", "Check the parameter inequalities exactly");
  validate->add_option("--n", val_params.n, "Alphabet size")->required();
  validate->add_option("--lambda1", val_params.lambda1, "lambda1 as p/q")->required();
  validate->add_option("--N", val_params.N, "Exponent multiplier (default: least N with lambda1 n N >= 1)");
  validate->add_option("--q", val_params.q, "Override q");

  // gen
  ParamArgs    gen_params;
  BudgetArgs   gen_budget;
  std::int64_t gen_count  = 1;
  std::string  gen_policy = "automatic";
  auto*        gen = app.add_subcommand("gen", "Generate the first relators");
  gen->add_option("--n", gen_params.n, "Alphabet size")->required();
  gen->add_option("--lambda1", gen_params.lambda1, "lambda1 as p/q")->required();
  gen->add_option("--N", gen_params.N, "Exponent multiplier");
  gen->add_option("--q", gen_params.q, "Override q");
  gen->add_option("--count", gen_count, "Number of relators")->capture_default_str();
  gen->add_option("--length-bound", gen_policy,
                  "automatic | enforce | report-only: handling of |w| <= lambda1 |r|")
      ->check(CLI::IsMember({"automatic", "enforce", "report-only"}))
      ->capture_default_str();
  gen_budget.add_to(gen, false);

  // eq / nf / conj
  std::string pres_path;
  BudgetArgs  dec_budget;
  std::string word_u, word_v;
  auto*       eq = app.add_subcommand("eq", "Decide u = v in the group");
  eq->add_option("u", word_u, "First word")->required();
  eq->add_option("v", word_v, "Second word")->required();
  eq->add_option("--presentation", pres_path, "Presentation JSON")->required();
  dec_budget.add_to(eq, true);

  auto* nf = app.add_subcommand("nf", "Regular normal form x1^k1 ... xn^kn");
  nf->add_option("g", word_u, "Word")->required();
  nf->add_option("--presentation", pres_path, "Presentation JSON")->required();
  dec_budget.add_to(nf, true);

  auto* conj = app.add_subcommand("conj", "Decide whether u and v are conjugate");
  conj->add_option("u", word_u, "First word")->required();
  conj->add_option("v", word_v, "Second word")->required();
  conj->add_option("--presentation", pres_path, "Presentation JSON")->required();
  dec_budget.add_to(conj, false);

  // check-diagram
  std::string diagram_path;
  std::string condition = "validate";
  std::string cd_lambda1, cd_lambda2;
  std::vector<int> letter_set;
  auto* check = app.add_subcommand("check-diagram", "Validate a diagram and check a condition");
  check->add_option("file", diagram_path, "Diagram JSON")->required();
  check->add_option("--presentation", pres_path, "Presentation JSON")->required();
  check->add_option("--condition", condition, "validate | B | X | main-lemma | letters")
      ->check(CLI::IsMember({"validate", "B", "X", "main-lemma", "letters"}))
      ->capture_default_str();
  check->add_option("--lambda1", cd_lambda1, "Override lambda1");
  check->add_option("--lambda2", cd_lambda2, "Override lambda2 (default 2/n)");
  check->add_option("--letters", letter_set, "Letter indices for the letters condition")
      ->delimiter(',');

  // enum-words
  int          enum_n     = 0;
  std::int64_t enum_count = 10;
  std::string  enum_start;
  bool         enum_json = false;
  auto*        words = app.add_subcommand("enum-words", "Reduced words in deg-lex order");
  words->add_option("--n", enum_n, "Alphabet size")->required();
  words->add_option("--count", enum_count, "How many words")->capture_default_str();
  words->add_option("--after", enum_start, "Start after this word (default: the empty word)");
  words->add_flag("--json", enum_json, "Emit a JSON array");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*validate) {
      ConstructionParams const p      = val_params.resolve();
      ParamsReport const       report = validate_params(p);
      Json                     out    = {{"params", to_json(p)}, {"report", to_json(report)}};
      if (p.n == 2) {
        out["note"] = "n = 2: every group with a 2-element file basis is polycyclic";
      }
      emit(out);
      return report.ok() ? exit_yes : exit_no;
    }

    if (*gen) {
      ConstructionParams const p = gen_params.resolve();
      if (gen_count < 0) {
        throw UsageError("--count must be nonnegative");
      }
      LengthBoundPolicy const policy = gen_policy == "enforce"       ? LengthBoundPolicy::enforce
                                       : gen_policy == "report-only" ? LengthBoundPolicy::report_only
                                                                     : LengthBoundPolicy::automatic;
      Budget const         b = gen_budget.resolved();
      GenerateResult const g = generate(p, gen_count, b, policy);
      Json                 out = to_json(g);
      out["budget"]            = budget_json(b);
      emit(out);
      return g.truncated ? exit_budget : exit_yes;
    }

    if (*eq || *nf || *conj || *check) {
      Presentation const P = [&] {
        Json const j = read_json_file(pres_path);
        return presentation_from_json(j);
      }();
      int const n = P.params.n;

      if (*check) {
        Diagram const d      = diagram_from_json(read_json_file(diagram_path));
        auto const    S      = P.relator_words();
        DiagramReport report = validate_diagram(d, S);
        Json          out    = {{"validation", to_json(report)}};
        if (!report.ok() || condition == "validate") {
          emit(out);
          return report.ok() ? exit_yes : exit_no;
        }
        auto rational_arg = [](std::string const& text, Rational const& fallback) {
          try {
            return text.empty() ? fallback : parse_rational(text);
          } catch (MalformedInput const& e) {
            throw UsageError(e.what());
          }
        };
        Rational const l1   = rational_arg(cd_lambda1, P.params.lambda1);
        Rational const l2   = rational_arg(cd_lambda2, P.params.lambda2());
        Selection const sel = special_selection(d, n);
        out["selection"]    = to_json(sel);
        out["lambda1"]      = to_string(l1);
        out["lambda2"]      = to_string(l2);
        bool pass           = false;
        if (condition == "B") {
          ConditionBReport const b = check_condition_B(d, sel, l1, l2);
          out["condition_B"]       = to_json(b);
          pass                     = b.ok();
        } else if (condition == "X") {
          Rational const         mu = l1 + 5 * l2;
          InequalityResult const x  = check_condition_X(d, sel, mu);
          out["mu"]                 = to_string(mu);
          out["condition_X"]        = to_json(x);
          pass                      = x.holds;
        } else if (condition == "main-lemma") {
          out["condition_B"]           = to_json(check_condition_B(d, sel, l1, l2));
          InequalityResult const x     = check_main_lemma(d, sel, l1, l2);
          out["main_lemma"]            = to_json(x);
          pass                         = x.holds;
        } else {
          if (letter_set.empty()) {
            throw UsageError("--letters is required for the letters condition");
          }
          InequalityResult const x = check_letter_budget(d, sel, letter_set, n);
          out["letter_budget"]     = to_json(x);
          pass                     = x.holds;
        }
        emit(out);
        return pass ? exit_yes : exit_no;
      }

      Budget const b = dec_budget.resolved();
      Json         out;
      out["presentation"] = {{"n", n},
                             {"lambda1", to_string(P.params.lambda1)},
                             {"N", P.params.N},
                             {"relators", P.relators.size()}};
      out["budget"] = budget_json(b);
      int code      = exit_budget;
      if (*eq) {
        PowerWord const u = word_arg(word_u, n);
        PowerWord const v = word_arg(word_v, n);
        Outcome const   o = equals_in_G(P, u, v, b, dec_budget.resolved_engine());
        out["u"]          = to_string(u);
        out["v"]          = to_string(v);
        out["result"]     = to_json(o);
        code              = verdict_exit(o.value);
      } else if (*nf) {
        PowerWord const        g = word_arg(word_u, n);
        NormalFormResult const r = regular_normal_form(P, g, b, dec_budget.resolved_engine());
        out["g"]                 = to_string(g);
        out["result"]            = to_json(r);
        code                     = verdict_exit(r.outcome.value);
      } else {
        PowerWord const u = word_arg(word_u, n);
        PowerWord const v = word_arg(word_v, n);
        Outcome const   o = are_conjugate(P, u, v, b);
        out["u"]          = to_string(u);
        out["v"]          = to_string(v);
        out["result"]     = to_json(o);
        code              = verdict_exit(o.value);
      }
      emit(out);
      return code;
    }

    if (*words) {
      if (enum_n < 1 || enum_count < 0) {
        throw UsageError("need --n >= 1 and --count >= 0");
      }
      Alphabet const alphabet{enum_n};
      PowerWord      w = word_arg(enum_start, enum_n);
      Json           list = Json::array();
      for (std::int64_t k = 0; k < enum_count; ++k) {
        w = deglex_successor(w, alphabet);
        if (enum_json) {
          list.push_back(to_string(w));
        } else {
          std::cout << to_string(w) << '\n';
        }
      }
      if (enum_json) {
        std::cout << list.dump() << '\n';
      }
      return exit_yes;
    }
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (NoSelection const& e) {
    std::cerr << "no special selection: " << e.what() << '\n';
    return exit_data;
  } catch (PreconditionViolation const& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return exit_no;
  } catch (Error const& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return exit_data;
  }
  return exit_usage;
}
