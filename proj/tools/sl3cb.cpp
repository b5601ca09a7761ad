// Command-line front end. Output is JSON {"query":...,"result":...,"checks":[...]}
// or CSV with --csv. Exit codes: 0 ok, 1 a check failed, 2 bad input.

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl3cb/analysis.hpp"
#include "sl3cb/classical.hpp"
#include "sl3cb/global.hpp"
#include "sl3cb/graphs.hpp"
#include "sl3cb/local.hpp"
#include "sl3cb/verlinde.hpp"
#include "sl3cb/weights.hpp"

using json = nlohmann::ordered_json;
using namespace sl3cb;

namespace {

constexpr const char* kCsvHelp =
    "CSV output: a header line, then one row per entry for tabular results\n"
    "(hilbert: level,h; hilbert --multigraded: level,weights,dim; generators:\n"
    "level,weights,point; markov: part,corners,hexagon). Other commands print\n"
    "a single row with the scalar fields of the result.";

struct Output {
  json query = json::object();
  json result = json::object();
  json checks = json::array();
  json rows = json::array();
  bool failed = false;

  void check(const std::string& name, bool passed, json detail = nullptr) {
    json c{{"name", name}, {"passed", passed}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
    if (!passed) failed = true;
  }
};

struct GraphArgs {
  std::string spec;
  std::string file;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
  auto* g = cmd->add_option("--graph", args.spec,
                            "caterpillar:n, gamma:g,n, dumbbell, theta, or inline JSON");
  auto* f = cmd->add_option("--graph-file", args.file, "graph JSON file");
  g->excludes(f);
}

TrivalentGraph load_graph(const GraphArgs& args) {
  if (!args.file.empty()) return parse_graph_file(args.file);
  if (args.spec.empty()) throw std::invalid_argument("one of --graph or --graph-file is required");
  return parse_graph(args.spec);
}

std::vector<Weight> parse_weights(const std::vector<std::string>& tokens) {
  std::vector<Weight> out;
  for (const auto& t : tokens) out.push_back(parse_weight(t));
  return out;
}

json weights_json(const std::vector<Weight>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(to_string(w));
  return arr;
}

std::string join_weights(const std::vector<Weight>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? " " : "") + to_string(ws[i]);
  return out;
}

json point_json(const TrivalentGraph& g, const GlobalPoint& p) {
  json parts = json::array();
  for (const auto& lp : p.parts) parts.push_back(to_string(lp));
  return json{{"level", p.level}, {"leaf_weights", weights_json(leaf_weights(g, p))}, {"vertices", parts}};
}

json graph_json(const TrivalentGraph& g) {
  return json{{"name", g.name()},
              {"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"leaves", g.leaf_count()},
              {"genus", g.genus()}};
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n ") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

void emit(const Output& out, bool csv) {
  if (!csv) {
    json doc{{"query", out.query}, {"result", out.result}, {"checks", out.checks}};
    std::cout << doc.dump(2) << "\n";
    return;
  }
  json rows = out.rows;
  if (rows.empty()) {
    json row = json::object();
    for (const auto& [k, v] : out.result.items()) {
      if (!v.is_array() && !v.is_object()) row[k] = v;
    }
    rows.push_back(row);
  }
  bool first = true;
  for (const auto& [k, v] : rows[0].items()) {
    std::cout << (first ? "" : ",") << csv_cell(k);
    first = false;
  }
  std::cout << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [k, v] : row.items()) {
      std::cout << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-point models of sl3 conformal blocks on trivalent graphs"};
  app.footer(kCsvHelp);
  app.require_subcommand(1);
  bool csv = false;
  app.add_flag("--csv", csv, "CSV instead of JSON");

  GraphArgs graph_args;
  std::vector<std::string> weight_tokens;
  int level = 0;
  int max_level = 0;
  int genus_arg = 0;
  int bound = 0;
  int move_degree = 3;
  int expected = -1;
  int max_weight = -1;
  bool oracle = false;
  bool multigraded = false;
  std::string check_kind;

  auto* dim = app.add_subcommand("dim", "number of lattice points over leaf weights at a level");
  add_graph_options(dim, graph_args);
  dim->add_option("--weights", weight_tokens, "leaf weights a,b in label order");
  dim->add_option("--level", level, "level L")->required()->check(CLI::NonNegativeNumber);
  dim->add_flag("--oracle", oracle, "cross-check against fusion coefficients");

  auto* fusion = app.add_subcommand("fusion", "Kac-Walton fusion coefficient and local count");
  fusion->add_option("--weights", weight_tokens, "three weights a,b")->required()->expected(3);
  fusion->add_option("--level", level, "level L")->required()->check(CLI::NonNegativeNumber);

  auto* classical = app.add_subcommand("classical", "classical triple invariants and the base point");
  classical->add_option("--weights", weight_tokens, "three weights a,b")->required()->expected(3);

  auto* verlinde = app.add_subcommand("verlinde", "Verlinde formula with calibrated torus order");
  verlinde->add_option("--genus", genus_arg, "genus g")->required()->check(CLI::NonNegativeNumber);
  verlinde->add_option("--weights", weight_tokens, "marked weights a,b");
  verlinde->add_option("--level", level, "level L")->required()->check(CLI::NonNegativeNumber);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function h(0..max-level)");
  add_graph_options(hilbert, graph_args);
  hilbert->add_option("--max-level", max_level, "largest level")->required()->check(CLI::NonNegativeNumber);
  hilbert->add_flag("--multigraded", multigraded, "also list nonzero dimensions per leaf tuple");
  hilbert->add_option("--max-weight", max_weight, "multigraded: bound on a+b per leaf (default: level)");

  auto* generators = app.add_subcommand("generators", "indecomposable points up to a level");
  add_graph_options(generators, graph_args);
  generators->add_option("--bound", bound, "search bound D")->required()->check(CLI::NonNegativeNumber);

  auto* check = app.add_subcommand("check", "structural checks");
  check->add_option("kind", check_kind, "normal | gorenstein | generation | relations")
      ->required()
      ->check(CLI::IsMember({"normal", "gorenstein", "generation", "relations"}));
  add_graph_options(check, graph_args);
  check->add_option("--max-level", max_level, "search bound D")->required()->check(CLI::NonNegativeNumber);
  check->add_option("--move-degree", move_degree, "relations: factors an exchange may touch");
  check->add_option("--expected", expected, "generation: expected maximal generator level");

  auto* markov = app.add_subcommand("markov", "the kernel element of the triangle boundary map");
  auto* presentation = app.add_subcommand("verify-presentation", "symbolic check of the cubic relation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  try {
    if (dim->parsed()) {
      const auto g = load_graph(graph_args);
      const auto ws = parse_weights(weight_tokens);
      out.query = {{"command", "dim"}, {"graph", graph_json(g)}, {"weights", weights_json(ws)}, {"level", level}};
      const long d = global_dim(g, ws, level);
      out.result["dim"] = d;
      if (oracle) {
        const long o = oracle_dim(g, ws, level);
        out.result["oracle"] = o;
        out.check("oracle", d == o, json{{"polytope", d}, {"fusion", o}});
        if (d != o) std::cerr << "dim: polytope count " << d << " differs from fusion oracle " << o << "\n";
      }
    } else if (fusion->parsed()) {
      const auto ws = parse_weights(weight_tokens);
      const Boundary abc{ws[0], ws[1], ws[2]};
      out.query = {{"command", "fusion"}, {"weights", weights_json(ws)}, {"level", level}};
      const long f = fusion_dim(ws[0], ws[1], ws[2], level);
      const long c = fused_count(abc, level);
      out.result = {{"fusion", f}, {"fused_count", c}, {"fiber", enumerate_fiber(abc, level).size()}};
      out.check("fused_count = fusion", f == c);
    } else if (classical->parsed()) {
      const auto ws = parse_weights(weight_tokens);
      const Boundary abc{ws[0], ws[1], ws[2]};
      out.query = {{"command", "classical"}, {"weights", weights_json(ws)}};
      const long c = classical_count(abc);
      const long t = triple_invariant_dim(ws[0], ws[1], ws[2]);
      out.result = {{"classical_count", c}, {"triple_invariant_dim", t},
                    {"triangles", enumerate_triangles(abc).size()}};
      if (auto q = q_min(abc)) {
        out.result["q_min"] = to_string(LocalPoint{q->exponents(), Rep::CB});
        out.result["v_min"] = q->v_min;
        out.result["k"] = q->k;
      } else {
        out.result["q_min"] = nullptr;
      }
      out.check("classical_count = triple_invariant_dim", c == t);
    } else if (verlinde->parsed()) {
      const auto ws = parse_weights(weight_tokens);
      out.query = {{"command", "verlinde"}, {"genus", genus_arg}, {"weights", weights_json(ws)}, {"level", level}};
      const Calibration cal = calibrate_torus_order(level);
      const auto v = verlinde_evaluate(genus_arg, ws, level, static_cast<double>(cal.torus_order));
      out.result = {{"dim", v.rounded}, {"value", v.value}, {"residual", v.residual},
                    {"torus_order", cal.torus_order}, {"torus_factor", cal.factor}};
      out.check("residual", v.residual <= kVerlindeTolerance);
    } else if (hilbert->parsed()) {
      const auto g = load_graph(graph_args);
      out.query = {{"command", "hilbert"}, {"graph", graph_json(g)}, {"max_level", max_level}};
      const auto h = hilbert_function(g, max_level);
      out.result["h"] = h;
      if (multigraded) {
        json table = json::array();
        for (int l = 0; l <= max_level; ++l) {
          for (const auto& [lw, d] : multigraded_table(g, l, max_weight < 0 ? l : max_weight)) {
            table.push_back({{"level", l}, {"weights", join_weights(lw)}, {"dim", d}});
            out.rows.push_back(table.back());
          }
        }
        out.result["multigraded"] = std::move(table);
      } else {
        for (int l = 0; l <= max_level; ++l) out.rows.push_back({{"level", l}, {"h", h[l]}});
      }
    } else if (generators->parsed()) {
      const auto g = load_graph(graph_args);
      out.query = {{"command", "generators"}, {"graph", graph_json(g)}, {"bound", bound}};
      const auto report = indecomposables_up_to(g, bound);
      out.result["max_level"] = report.max_level;
      out.result["count"] = report.points.size();
      json pts = json::array();
      for (const auto& p : report.points) {
        pts.push_back(point_json(g, p));
        out.rows.push_back({{"level", p.level}, {"weights", join_weights(leaf_weights(g, p))},
                            {"point", to_string(p)}});
      }
      out.result["points"] = std::move(pts);
    } else if (check->parsed()) {
      const auto g = load_graph(graph_args);
      out.query = {{"command", "check"}, {"kind", check_kind}, {"graph", graph_json(g)}, {"max_level", max_level}};
      if (check_kind == "normal") {
        if (g.genus() != 0) throw std::invalid_argument("check normal: graph must be a tree");
        const bool ok = check_normal(g, max_level);
        out.result["normal"] = ok;
        out.check("normal", ok);
      } else if (check_kind == "gorenstein") {
        const auto r = check_gorenstein_divisibility(g, max_level);
        out.result = {{"omega", point_json(g, r.omega)},
                      {"rank", r.rank},
                      {"facets", r.facet_count},
                      {"generator_level", r.generator_level},
                      {"verified_up_to", r.verified_up_to},
                      {"omega_interior", r.omega_interior},
                      {"omega_minimal", r.omega_minimal},
                      {"checked_points", r.checked_points},
                      {"interior_points", r.interior_points}};
        if (r.series) {
          out.result["h_vector"] = r.series->h;
          out.result["denominator_degrees"] = r.series->denominator;
          out.result["a_invariant"] = r.series->a_invariant;
          out.result["palindromic"] = r.series->palindromic;
        }
        out.check("divisibility", r.passed, r.failure.empty() ? json(nullptr) : json(r.failure));
        if (r.series) out.check("palindromic h-vector", r.series->palindromic);
      } else if (check_kind == "generation") {
        const auto r = indecomposables_up_to(g, max_level);
        out.result = {{"max_level", r.max_level}, {"count", r.points.size()}, {"search_bound", r.search_bound}};
        int want = expected;
        if (want < 0 && g.genus() == 0) want = 1;
        if (want < 0 && g.genus() == 1) want = 3;
        if (want >= 0) {
          out.query["expected"] = want;
          out.check("max generator level", r.max_level == want, json{{"found", r.max_level}, {"expected", want}});
        }
      } else {
        if (g.genus() != 0) throw std::invalid_argument("check relations: graph must be a tree");
        out.query["move_degree"] = move_degree;
        const auto r = relation_connectivity_report(g, move_degree, max_level);
        out.result = {{"connected", r.connected},
                      {"points_checked", r.points_checked},
                      {"max_factorizations", r.max_factorizations}};
        if (r.witness) {
          out.result["witness"] = point_json(g, *r.witness);
          out.result["witness_factorizations"] = r.witness_factorizations;
        }
        out.check("factorizations connected", r.connected);
      }
    } else if (markov->parsed()) {
      out.query = {{"command", "markov"}};
      const auto [plus, minus] = markov_element();
      auto tri = [](const Triangle& t) { return json{{"corners", t.corners}, {"hexagon", t.hexagon}}; };
      out.result = {{"positive", tri(plus)}, {"negative", tri(minus)}};
      std::vector<Weight> bp(boundary(plus).begin(), boundary(plus).end());
      std::vector<Weight> bm(boundary(minus).begin(), boundary(minus).end());
      out.result["boundary"] = weights_json(bp);
      out.check("same boundary", bp == bm);
      for (const auto& [name, t] : {std::pair{"positive", plus}, std::pair{"negative", minus}}) {
        json c = json::array(), h = json::array();
        for (int v : t.corners) c.push_back(v);
        for (int v : t.hexagon) h.push_back(v);
        out.rows.push_back({{"part", name}, {"corners", c.dump()}, {"hexagon", h.dump()}});
      }
    } else if (presentation->parsed()) {
      out.query = {{"command", "verify-presentation"}};
      const auto r = classical::check_presentation_relation();
      json tried = json::array();
      for (const auto& [c, ok] : r.tried) tried.push_back({{"convention", classical::to_string(c)}, {"holds", ok}});
      out.result = {{"holds", r.holds}, {"convention", r.holds ? json(classical::to_string(r.convention)) : json(nullptr)},
                    {"tried", tried}};
      out.check("relation reduces to zero", r.holds);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CalibrationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  emit(out, csv);
  return out.failed ? 1 : 0;
}
