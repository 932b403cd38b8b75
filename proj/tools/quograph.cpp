// quograph: walk partitions, quotient polynomials and association schemes of
// finite simple graphs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "quograph/errors.hpp"
#include "quograph/report.hpp"

namespace {

using quograph::AnalysisOptions;
using json = nlohmann::ordered_json;

enum class Section { all, partition, polys, scheme };

struct Settings {
  std::string graph;
  std::string format = "text";
  bool orbits = false;
  std::optional<double> tol;
  bool debug_checks = false;
  bool timing = false;
  std::size_t cap = quograph::kDefaultAutomorphismCap;
};

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_flag("--orbits", s.orbits, "Run the brute-force automorphism pass");
  cmd->add_option("--automorphism-cap", s.cap, "Largest order for the automorphism pass")
      ->capture_default_str();
  cmd->add_option("--tol", s.tol, "Tolerance for grouping pairs by crossed multiplicities")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--debug-checks", s.debug_checks,
                "Enable redundant witnesses (extended walk vectors, solved p^k_ij)");
  cmd->add_flag("--timing", s.timing, "Record per-stage wall-clock times");
}

AnalysisOptions options_from(const Settings& s) {
  AnalysisOptions o;
  o.debug_checks = s.debug_checks;
  o.orbits = s.orbits;
  o.automorphism_cap = s.cap;
  o.timing = s.timing;
  o.tolerances = quograph::Tolerances::from_environment();
  if (s.tol) o.tolerances.partition = *s.tol;
  return o;
}

json pick(const json& full, std::initializer_list<const char*> top,
          std::initializer_list<const char*> from_quotient) {
  json out;
  for (const char* k : top) out[k] = full.contains(k) ? full.at(k) : json(nullptr);
  const json& q = full.at("quotient");
  for (const char* k : from_quotient) out[k] = q.is_null() ? json(nullptr) : q.at(k);
  return out;
}

int run_analysis(const Settings& s, Section section) {
  const auto report = quograph::analyze(quograph::parse_graph_spec(s.graph), options_from(s));
  if (s.format == "json") {
    const json full = quograph::to_json(report);
    json out;
    switch (section) {
      case Section::all:
        out = full;
        break;
      case Section::partition:
        out = pick(full, {"source", "graph", "error"},
                   {"d", "r", "D", "partition", "walk_counts", "intersection_matrix"});
        break;
      case Section::polys: {
        out = pick(full, {"source", "graph", "error"},
                   {"d", "r", "D", "quotient_polynomial", "polynomials", "hoffman"});
        const json& f = full.at("flags");
        out["distance_polynomials"] = f.is_null() ? json(nullptr) : f.at("distance_polynomials");
        break;
      }
      case Section::scheme:
        out = pick(full, {"source", "graph", "error", "scheme"}, {"quotient_polynomial"});
        break;
    }
    std::cout << quograph::dump_json(out);
  } else {
    switch (section) {
      case Section::all:
        quograph::render_text(std::cout, report);
        break;
      case Section::partition:
        quograph::render_summary(std::cout, report);
        if (!report.error) quograph::render_partition(std::cout, report);
        break;
      case Section::polys:
        quograph::render_summary(std::cout, report);
        if (!report.error) quograph::render_polynomials(std::cout, report);
        break;
      case Section::scheme:
        quograph::render_summary(std::cout, report);
        if (!report.error) quograph::render_scheme(std::cout, report);
        break;
    }
  }
  if (report.error) {
    std::cerr << "quograph: " << report.error->kind << " in " << report.error->module << ": "
              << report.error->message << '\n';
    return 1;
  }
  return 0;
}

int run_census(const Settings& s, const std::string& input) {
  quograph::CensusResult result;
  if (input == "-") {
    result = quograph::census(std::cin, options_from(s));
  } else {
    std::ifstream in(input);
    if (!in) throw quograph::InputError("cli", "cannot open graph6 stream '" + input + "'");
    result = quograph::census(in, options_from(s));
  }
  for (const auto& e : result.errors)
    std::cerr << "quograph: line " << e.line << ": " << e.message << '\n';
  if (s.format == "json")
    std::cout << quograph::dump_json(quograph::to_json(result));
  else
    quograph::render_text(std::cout, result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walk partitions, quotient polynomials and association schemes of graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "quograph 0.1.0");

  Settings settings;
  std::string census_input = "-";
  const char* graph_help =
      "Graph: circulant:<n>:<s1>,..., g6:<graph6>, named:<name>, or an edge-list file";
  struct Entry {
    const char* name;
    const char* help;
    Section section;
  };
  const Entry entries[] = {
      {"analyze", "Full analysis report", Section::all},
      {"partition", "Walk partition of V x V, W, W+ and B", Section::partition},
      {"polys", "Quotient, Hoffman and distance polynomials", Section::polys},
      {"scheme", "Association scheme generated by a quotient-polynomial graph", Section::scheme},
  };
  std::optional<Section> chosen;
  for (const auto& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    cmd->add_option("graph", settings.graph, graph_help)->required();
    add_common(cmd, settings);
    cmd->callback([&chosen, section = e.section] { chosen = section; });
  }
  CLI::App* census_cmd = app.add_subcommand("census", "Classify every graph in a graph6 stream");
  census_cmd->add_option("input", census_input, "graph6 file, or - for standard input")
      ->capture_default_str();
  add_common(census_cmd, settings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (census_cmd->parsed()) return run_census(settings, census_input);
    return run_analysis(settings, *chosen);
  } catch (const quograph::ContractViolation& e) {
    std::cerr << "quograph: CONTRACT VIOLATION in " << e.module() << ": " << e.what() << '\n';
    return 2;
  } catch (const quograph::ToleranceError& e) {
    std::cerr << "quograph: tolerance error in " << e.module() << ": " << e.what() << '\n';
    return 2;
  } catch (const quograph::Error& e) {
    std::cerr << "quograph: " << e.kind() << " in " << e.module() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "quograph: internal error: " << e.what() << '\n';
    return 2;
  }
}
