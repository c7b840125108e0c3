// humbert: compute modular equations, enumerate configurations, run
// verification suites. Exit codes: 0 ok, 1 usage, 2 degenerate, 3 budget,
// 4 a verification suite failed.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "humbert/serialize.hpp"
#include "humbert/verify.hpp"

namespace {

using namespace humbert;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kDegenerate = 2, kBudget = 3, kVerifyFailed = 4 };

Assignment parse_sets(const std::vector<std::string>& sets) {
  Assignment spec;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("--set expects a<i>=<rational>, got '" + s + "'");
    auto v = parse_var(s.substr(0, eq));
    if (!v) throw ParseError("unknown variable in --set: " + s.substr(0, eq));
    Rational r;
    if (r.set_str(s.substr(eq + 1), 10) != 0 || r.get_den() == 0)
      throw ParseError("not a rational number: " + s.substr(eq + 1));
    r.canonicalize();
    if (spec.count(*v)) throw ParseError("variable set twice: " + s.substr(0, eq));
    spec[*v] = r;
  }
  return spec;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + out);
  f << text;
}

ordered_json graph_json(const ConfigClass& c) {
  ordered_json edges = ordered_json::array();
  for (const auto& [i, j] : c.representative.edges) edges.push_back({i, j});
  ordered_json j{{"label", c.label},
                 {"edges", edges},
                 {"loops", c.representative.loops},
                 {"count", c.count},
                 {"orbit_size", c.orbit_size},
                 {"bipartite", c.bipartite},
                 {"connected", c.connected},
                 {"pipeline_supported", c.pipeline_supported}};
  try {
    j["delta"] = delta_of(static_cast<int>(c.representative.degree), static_cast<int>(c.representative.edges.size()));
  } catch (const DomainError&) {
    j["delta"] = nullptr;
  }
  return j;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Humbert modular equations from plane-curve configurations"};
  app.require_subcommand(1);

  std::string out;

  auto* compute = app.add_subcommand("compute", "compute the modular equation of a configuration");
  std::string config, format = "json";
  std::vector<std::string> sets;
  std::uint64_t seed = 0;
  bool full_symbolic = false;
  compute->add_option("--config", config, "configuration label, e.g. 5,1 or 9,0b")->required();
  compute->add_option("--set", sets, "fix a branch point, e.g. a3=5 (repeatable)");
  compute->add_option("--seed", seed, "seed for auxiliary points");
  compute->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  compute->add_flag("--full-symbolic", full_symbolic, "allow cubic runs with no fixed branch point");
  compute->add_option("--out", out, "write the result to a file");

  auto* graphs = app.add_subcommand("graphs", "census of configuration graphs");
  unsigned degree = 0;
  bool best_effort = false, multi_edges = false;
  graphs->add_option("--degree", degree, "curve degree d")->required()->check(CLI::PositiveNumber);
  graphs->add_flag("--best-effort", best_effort, "required for d >= 4");
  graphs->add_flag("--multi-edges", multi_edges, "allow repeated edges");
  graphs->add_option("--out", out, "write the census to a file");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  unsigned samples = 0, trials = 0;
  std::uint64_t vseed = 0;
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"delta5", "census", "degeneracy", "pencil12", "homogeneity", "oracle-disc",
                             "resultant-degree", "pipelines"}));
  verify->add_option("--samples", samples, "random points (delta5) or specializations (degeneracy)");
  verify->add_option("--trials", trials, "random instances (pencil12, oracle-disc)");
  verify->add_option("--seed", vseed, "seed");
  verify->add_option("--out", out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed()) {
      PipelineOptions opts;
      opts.specialization = parse_sets(sets);
      opts.seed = seed;
      opts.full_symbolic = full_symbolic;
      ModularEquation m = compute_by_label(config, opts);
      emit(format == "text" ? to_text(m) : to_json(m).dump(2) + "\n", out);
      return kOk;
    }
    if (graphs->parsed()) {
      if (degree >= 4 && !best_effort) {
        std::cerr << "error: degree " << degree << " census is best-effort only; pass --best-effort\n";
        return kUsage;
      }
      ordered_json classes = ordered_json::array();
      for (const auto& c : enumerate_classes(degree, multi_edges)) classes.push_back(graph_json(c));
      ordered_json doc{{"degree", degree}, {"best_effort", degree >= 4}, {"classes", classes}};
      emit(doc.dump(2) + "\n", out);
      return kOk;
    }
    SuiteReport rep;
    if (suite == "delta5") rep = verify_delta5(samples ? samples : 1000, vseed);
    else if (suite == "census") rep = verify_census();
    else if (suite == "degeneracy") rep = verify_degeneracy(samples ? samples : 20, vseed);
    else if (suite == "pencil12") rep = verify_pencil12(trials ? trials : 20, vseed);
    else if (suite == "homogeneity") rep = verify_homogeneity({{var::a2, Rational(2)}, {var::a3, Rational(5)}}, vseed);
    else if (suite == "oracle-disc") rep = verify_oracle_disc(trials ? trials : 20, vseed);
    else if (suite == "resultant-degree") rep = verify_resultant_degree();
    else rep = verify_pipelines({"(9,0)b", "(8,1)", "(7,2)a", "(7,2)b", "(6,3)"},
                                {{var::a2, Rational(2)}, {var::a3, Rational(5)}}, var::a2, vseed);
    emit(rep.to_json().dump(2) + "\n", out);
    return rep.pass ? kOk : kVerifyFailed;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate configuration: " << e.what() << "\n";
    return kDegenerate;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
