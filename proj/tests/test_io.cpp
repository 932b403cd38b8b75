#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "quograph/io.hpp"
#include "quograph/report.hpp"

using namespace quograph;

namespace {

std::vector<Edge> edges_of(const Graph& g) { return g.edges(); }

std::size_t parse_error_offset(std::string_view s) {
  try {
    parse_graph6(s);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for '" << s << "'";
  return static_cast<std::size_t>(-1);
}

std::string census_json(const std::string& text, bool orbits = false) {
  std::istringstream in(text);
  AnalysisOptions o;
  o.orbits = orbits;
  return dump_json(to_json(census(in, o)));
}

}  // namespace

TEST(Graph6, DecodesByHand) {
  EXPECT_EQ(edges_of(parse_graph6("D?{")), (std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("@").order(), 1u);
  EXPECT_EQ(parse_graph6("@").edge_count(), 0u);
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  std::vector<Edge> bipartite;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v : {4u, 5u}) bipartite.emplace_back(u, v);
  EXPECT_EQ(parse_graph6("E?~o"), build_graph(6, bipartite));
}

TEST(Graph6, AcceptsHeaderAndTrailingNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete_graph(3));
  EXPECT_EQ(parse_graph6("Bw\r\n"), complete_graph(3));
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("\n"), ParseError);
  EXPECT_EQ(parse_error_offset("D?\x01"), 2u);
  EXPECT_EQ(parse_error_offset("D\x7f{"), 1u);
  EXPECT_THROW(parse_graph6("D?"), ParseError);     // too short
  EXPECT_THROW(parse_graph6("D?{?"), ParseError);   // too long
  EXPECT_THROW(parse_graph6("~"), ParseError);       // truncated long form
}

TEST(Graph6, RoundTrip) {
  for (const Graph& g : {petersen_graph(), y6_graph(), star_graph(6), Graph(0, {}), complete_graph(1)})
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  // More than 62 vertices switches to the four-byte order encoding.
  const Graph big = cycle_graph(100);
  const std::string s = to_graph6(big);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph6(s), big);
}

TEST(Graph6, RoundTripsCorpus) {
  for (const auto& line : oracle::read_lines("connected_le7.g6")) {
    if (line.empty()) continue;
    EXPECT_EQ(to_graph6(parse_graph6(line)), line);
  }
}

TEST(Circulant, Descriptors) {
  EXPECT_EQ(parse_circulant("circulant:17:1,4"), circulant(17, {1, 4}));
  EXPECT_EQ(parse_circulant("circulant:17:16,13"), circulant(17, {1, 4}));
  EXPECT_EQ(parse_circulant("circulant:5:1"), cycle_graph(5));
  EXPECT_THROW(parse_circulant("circulant:17:0"), ParseError);
  EXPECT_THROW(parse_circulant("circulant:17:17"), ParseError);
  EXPECT_THROW(parse_circulant("circulant:x:1"), ParseError);
  EXPECT_THROW(parse_circulant("circulant:17:"), ParseError);
  EXPECT_THROW(parse_circulant("circulant:17:1,,4"), ParseError);
  EXPECT_THROW(parse_circulant("circ:17:1"), ParseError);
}

TEST(EdgeList, HeaderAndComments) {
  const Graph g = parse_edge_list("# a path\n3 2\n0 1\n1 2   # last edge\n");
  EXPECT_EQ(g, path_graph(3));
  // Without a header the order is one more than the largest label.
  EXPECT_EQ(parse_edge_list("0 1\n1 2\n"), path_graph(3));
  // A header may declare isolated vertices.
  const Graph iso = parse_edge_list("5 1\n0 1\n");
  EXPECT_EQ(iso.order(), 5u);
  EXPECT_EQ(iso.edge_count(), 1u);
  EXPECT_EQ(parse_edge_list(""), Graph(0, {}));
}

TEST(EdgeList, RejectsMalformedLines) {
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 -1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("a b\n"), ParseError);
}

TEST(EdgeList, DataFilesMatchNamedGraphs) {
  EXPECT_EQ(load_graph(parse_graph_spec(oracle::data_path("y6.edges"))), y6_graph());
  EXPECT_EQ(load_graph(parse_graph_spec(oracle::data_path("petersen.edges"))), petersen_graph());
  EXPECT_THROW(load_graph(parse_graph_spec("/nonexistent/file.edges")), InputError);
}

TEST(NamedGraphs, Families) {
  EXPECT_EQ(named_graph("petersen"), petersen_graph());
  EXPECT_EQ(named_graph("y6"), y6_graph());
  EXPECT_EQ(named_graph("complete:4"), complete_graph(4));
  EXPECT_EQ(named_graph("cycle:7"), cycle_graph(7));
  EXPECT_EQ(named_graph("path:3"), path_graph(3));
  EXPECT_EQ(named_graph("star:3"), star_graph(3));
  EXPECT_EQ(named_graph("prism:6"), prism_graph(6));
  EXPECT_THROW(named_graph("dodecahedron"), ParseError);
  EXPECT_THROW(named_graph("wheel:5"), ParseError);
}

TEST(GraphSpec, Kinds) {
  EXPECT_EQ(parse_graph_spec("circulant:17:1,4").kind, GraphSpec::Kind::circulant);
  EXPECT_EQ(parse_graph_spec("g6:Bw").kind, GraphSpec::Kind::graph6);
  EXPECT_EQ(parse_graph_spec("graph6:Bw").value, "Bw");
  EXPECT_EQ(parse_graph_spec("named:petersen").kind, GraphSpec::Kind::named);
  EXPECT_EQ(parse_graph_spec("some/file.txt").kind, GraphSpec::Kind::edge_list_file);
  EXPECT_EQ(parse_graph_spec("g6:Bw").describe(), "g6:Bw");
  EXPECT_THROW(parse_graph_spec(""), ParseError);
}

TEST(ReportJson, RoundTripIsLossless) {
  AnalysisOptions o;
  o.orbits = true;
  o.automorphism_cap = 17;
  for (const char* spec : {"circulant:17:1,4", "named:y6", "named:petersen", "named:star:3"}) {
    const Report r = analyze(parse_graph_spec(spec), o);
    const std::string first = dump_json(to_json(r));
    const Report back = report_from_json(nlohmann::ordered_json::parse(first));
    EXPECT_EQ(dump_json(to_json(back)), first) << spec;
    EXPECT_EQ(back.flags, r.flags);
    EXPECT_EQ(back.scheme, r.scheme);
    ASSERT_EQ(back.quotient.has_value(), r.quotient.has_value());
    EXPECT_EQ(back.quotient->polynomials, r.quotient->polynomials);
    EXPECT_TRUE(same_set_partition(back.quotient->partition, r.quotient->partition));
  }
}

TEST(ReportJson, Deterministic) {
  const auto a = dump_json(to_json(analyze(parse_graph_spec("circulant:17:1,4"))));
  const auto b = dump_json(to_json(analyze(parse_graph_spec("circulant:17:1,4"))));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
}

TEST(ReportJson, MalformedJsonIsInputError) {
  EXPECT_THROW(report_from_json(nlohmann::ordered_json::parse("{\"source\": 3}")), InputError);
  EXPECT_THROW(report_from_json(nlohmann::ordered_json::array()), InputError);
}

TEST(ReportJson, PolynomialEncoding) {
  const Polynomial p({Rational(-18, 13), Rational(75, 26), Rational(-9, 13)});
  EXPECT_EQ(polynomial_from_json(polynomial_to_json(p)), p);
}

TEST(Report, DisconnectedGraphGivesPartialReport) {
  const std::vector<Edge> e{{0, 1}, {2, 3}};
  const Report r = analyze(build_graph(4, e), "two-edges");
  ASSERT_TRUE(r.error);
  EXPECT_EQ(r.error->kind, "analysis_error");
  EXPECT_FALSE(r.graph.connected);
  EXPECT_EQ(r.graph.n, 4u);
  EXPECT_FALSE(r.graph.diameter);
  EXPECT_FALSE(r.quotient);
  EXPECT_FALSE(r.flags);
  const auto j = to_json(r);
  EXPECT_TRUE(j.at("quotient").is_null());
  EXPECT_EQ(j.at("error").at("module"), "partitions");
}

TEST(Report, CirculantContents) {
  const Report r = analyze(parse_graph_spec("circulant:17:1,4"));
  ASSERT_FALSE(r.error);
  EXPECT_EQ(r.source, "circulant:17:1,4");
  EXPECT_EQ(r.per_vertex_consistent, true);
  ASSERT_TRUE(r.spectral);
  EXPECT_TRUE(r.spectral->partition_matches);
  ASSERT_TRUE(r.spectral->max_scalar_product_off_diagonal);
  EXPECT_LT(*r.spectral->max_scalar_product_off_diagonal, 1e-9);
  ASSERT_TRUE(r.scheme);
  EXPECT_EQ(r.scheme->class_count(), 4u);
  EXPECT_FALSE(r.orbits);
  const auto j = to_json(r);
  EXPECT_EQ(j.at("quotient").at("polynomials").at(2),
            polynomial_to_json(Polynomial({Rational(-18, 13), Rational(75, 26), Rational(-9, 13),
                                           Rational(-5, 13), Rational(3, 26)})));
  EXPECT_FALSE(j.contains("timing"));
}

TEST(Report, OrbitPassAboveCapIsSizeError) {
  AnalysisOptions o;
  o.orbits = true;
  EXPECT_THROW(analyze(parse_graph_spec("circulant:17:1,4"), o), SizeError);
  o.automorphism_cap = 17;
  const Report r = analyze(parse_graph_spec("circulant:17:1,4"), o);
  ASSERT_TRUE(r.orbits);
  EXPECT_EQ(r.orbits->automorphism_count, 68u);
  EXPECT_TRUE(r.orbits->orbit_polynomial);
  EXPECT_TRUE(r.orbits->refines_walk_partition);
}

TEST(Report, TimingIsOptIn) {
  AnalysisOptions o;
  o.timing = true;
  const Report r = analyze(parse_graph_spec("named:petersen"), o);
  EXPECT_FALSE(r.timing.empty());
  EXPECT_TRUE(to_json(r).contains("timing"));
}

TEST(Report, TextRendering) {
  std::ostringstream out;
  render_text(out, analyze(parse_graph_spec("circulant:17:1,4")));
  const std::string s = out.str();
  EXPECT_NE(s.find("p2(x) = 1/26 (3x^4 - 10x^3 - 18x^2 + 75x - 36)"), std::string::npos) << s;
  EXPECT_NE(s.find("B^T"), std::string::npos);
}

TEST(Census, FourVertexGraphs) {
  std::string text;
  const std::vector<Edge> paw{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  const std::vector<Edge> diamond{{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}};
  for (const Graph& g : {complete_graph(4), cycle_graph(4), path_graph(4), star_graph(3),
                         build_graph(4, paw), build_graph(4, diamond)})
    text += to_graph6(g) + "\n";
  const auto j = nlohmann::ordered_json::parse(census_json(text, true));
  EXPECT_EQ(j.at("summary").at("graphs"), 6);
  EXPECT_EQ(j.at("summary").at("quotient_polynomial"), 2);
  EXPECT_EQ(j.at("summary").at("distance_regular"), 2);
  EXPECT_EQ(j.at("summary").at("walk_regular"), 2);
  EXPECT_EQ(j.at("summary").at("orbit_polynomial"), 2);
  EXPECT_EQ(j.at("records").at(0).at("line"), 1);
}

TEST(Census, SingleEdge) {
  const auto j = nlohmann::ordered_json::parse(census_json("A_\n"));
  ASSERT_EQ(j.at("records").size(), 1u);
  EXPECT_EQ(j.at("records").at(0).at("flags").at("quotient_polynomial"), true);
  EXPECT_EQ(j.at("records").at(0).at("flags").at("distance_regular"), true);
}

TEST(Census, MalformedLineIsRecordedAndSkipped) {
  const auto j = nlohmann::ordered_json::parse(census_json("Bw\nD?\x01\n\nCF\n"));
  EXPECT_EQ(j.at("records").size(), 2u);
  ASSERT_EQ(j.at("errors").size(), 1u);
  EXPECT_EQ(j.at("errors").at(0).at("line"), 2);
  EXPECT_EQ(j.at("errors").at(0).at("kind"), "parse_error");
}

TEST(Census, DisconnectedGraphsAreCounted) {
  const auto j = nlohmann::ordered_json::parse(census_json("C?\nBw\n"));
  EXPECT_EQ(j.at("skipped_disconnected"), 1);
  EXPECT_EQ(j.at("records").size(), 1u);
}
