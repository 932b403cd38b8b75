#include "quograph/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "quograph/algebra.hpp"
#include "quograph/errors.hpp"

namespace quograph {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kModule = "cli";

// ---------------------------------------------------------------- values

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return to_string(z);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError(kModule, "expected an integer, got " + j.dump());
}

json matrix_to_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntegerMatrix matrix_from_json(const json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw InputError(kModule, "ragged matrix in report");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(j.at(i).at(k));
  }
  return m;
}

// Twelve significant digits, with values below the noise floor snapped to 0,
// so that reports are reproducible and survive a parse/serialise cycle.
double rounded(double x, double scale = 1.0) {
  if (!std::isfinite(x)) return x;
  if (std::fabs(x) < 1e-9 * std::max(1.0, scale)) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double v = std::strtod(buf, nullptr);
  return v == 0 ? 0.0 : v;
}

template <typename T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// ------------------------------------------------------------ sections

json flags_to_json(const ClassificationFlags& f, bool with_polynomials) {
  json j;
  j["walk_regular"] = f.walk_regular;
  j["h_punctual"] = f.h_punctual;
  j["distance_polynomial"] = f.distance_polynomial;
  j["quotient_polynomial"] = f.quotient_polynomial;
  j["distance_regular"] = f.distance_regular;
  j["orbit_polynomial"] = optional_to_json(f.orbit_polynomial);
  if (with_polynomials) {
    if (f.distance_polys) {
      json polys = json::array();
      for (const auto& p : *f.distance_polys) polys.push_back(polynomial_to_json(p));
      j["distance_polynomials"] = std::move(polys);
    } else {
      j["distance_polynomials"] = nullptr;
    }
  }
  return j;
}

ClassificationFlags flags_from_json(const json& j) {
  ClassificationFlags f;
  f.walk_regular = j.at("walk_regular").get<bool>();
  f.h_punctual = j.at("h_punctual").get<std::vector<bool>>();
  f.distance_polynomial = j.at("distance_polynomial").get<bool>();
  f.quotient_polynomial = j.at("quotient_polynomial").get<bool>();
  f.distance_regular = j.at("distance_regular").get<bool>();
  if (!j.at("orbit_polynomial").is_null()) f.orbit_polynomial = j.at("orbit_polynomial").get<bool>();
  if (j.contains("distance_polynomials") && !j.at("distance_polynomials").is_null()) {
    std::vector<Polynomial> polys;
    for (const auto& p : j.at("distance_polynomials")) polys.push_back(polynomial_from_json(p));
    f.distance_polys = std::move(polys);
  }
  return f;
}

json quotient_to_json(const QuotientReport& q) {
  json j;
  j["d"] = q.d;
  j["r"] = q.r;
  j["D"] = q.diameter;
  j["quotient_polynomial"] = q.is_quotient_polynomial;
  j["walk_regular"] = q.walk_regular;
  j["local_dimensions"] = q.local_dimensions;
  j["partition"] = partition_to_json(q.partition);
  if (q.polynomials) {
    json polys = json::array();
    for (const auto& p : *q.polynomials) polys.push_back(polynomial_to_json(p));
    j["polynomials"] = std::move(polys);
  } else {
    j["polynomials"] = nullptr;
  }
  if (q.walk_counts)
    j["walk_counts"] = {{"center", 0},
                        {"W", matrix_to_json(q.walk_counts->w)},
                        {"W_plus", matrix_to_json(q.walk_counts->w_plus)}};
  else
    j["walk_counts"] = nullptr;
  j["intersection_matrix"] =
      q.intersection_matrix ? matrix_to_json(q.intersection_matrix->b) : json(nullptr);
  j["hoffman"] = q.hoffman ? polynomial_to_json(*q.hoffman) : json(nullptr);
  return j;
}

QuotientReport quotient_from_json(const json& j) {
  QuotientReport q;
  q.d = j.at("d").get<std::size_t>();
  q.r = j.at("r").get<std::size_t>();
  q.diameter = j.at("D").get<std::size_t>();
  q.is_quotient_polynomial = j.at("quotient_polynomial").get<bool>();
  q.walk_regular = j.at("walk_regular").get<bool>();
  q.local_dimensions = j.at("local_dimensions").get<std::vector<std::size_t>>();
  q.partition = partition_from_json(j.at("partition"));
  if (!j.at("polynomials").is_null()) {
    std::vector<Polynomial> polys;
    for (const auto& p : j.at("polynomials")) polys.push_back(polynomial_from_json(p));
    q.polynomials = std::move(polys);
  }
  if (!j.at("walk_counts").is_null())
    q.walk_counts = WalkCountMatrices{matrix_from_json(j.at("walk_counts").at("W")),
                                      matrix_from_json(j.at("walk_counts").at("W_plus"))};
  if (!j.at("intersection_matrix").is_null())
    q.intersection_matrix = QuotientMatrixB{matrix_from_json(j.at("intersection_matrix"))};
  if (!j.at("hoffman").is_null()) q.hoffman = polynomial_from_json(j.at("hoffman"));
  return q;
}

json spectral_to_json(const SpectralSummary& s) {
  json j;
  j["spectrum"] = {{"eigenvalues", s.spectrum.eigenvalues},
                   {"multiplicities", s.spectrum.multiplicities}};
  j["partition_matches"] = s.partition_matches;
  j["max_scalar_product_off_diagonal"] = optional_to_json(s.max_scalar_product_off_diagonal);
  j["max_trace_ratio_error"] = optional_to_json(s.max_trace_ratio_error);
  return j;
}

SpectralSummary spectral_from_json(const json& j) {
  SpectralSummary s;
  s.spectrum.eigenvalues = j.at("spectrum").at("eigenvalues").get<std::vector<double>>();
  s.spectrum.multiplicities = j.at("spectrum").at("multiplicities").get<std::vector<std::size_t>>();
  s.partition_matches = j.at("partition_matches").get<bool>();
  if (!j.at("max_scalar_product_off_diagonal").is_null())
    s.max_scalar_product_off_diagonal = j.at("max_scalar_product_off_diagonal").get<double>();
  if (!j.at("max_trace_ratio_error").is_null())
    s.max_trace_ratio_error = j.at("max_trace_ratio_error").get<double>();
  return s;
}

AssociationScheme scheme_from_json(const json& j) {
  AssociationScheme s;
  for (const auto& m : j.at("matrices")) s.classes.push_back(matrix_from_json(m));
  s.p = j.at("p").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
  return s;
}

// ------------------------------------------------------------ text

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_matrix(std::ostream& out, const IntegerMatrix& m, const std::string& indent) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      cells[i * m.cols() + k] = to_string(m(i, k));
      width = std::max(width, cells[i * m.cols() + k].size());
    }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent;
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const auto& c = cells[i * m.cols() + k];
      out << (k == 0 ? "" : " ") << std::string(width - c.size(), ' ') << c;
    }
    out << '\n';
  }
}

std::string degree_summary(const std::vector<std::size_t>& degrees) {
  std::map<std::size_t, std::size_t, std::greater<>> count;
  for (auto k : degrees) ++count[k];
  std::string s;
  for (const auto& [k, c] : count) {
    if (!s.empty()) s += ' ';
    s += std::to_string(k) + "^" + std::to_string(c);
  }
  return s.empty() ? "-" : s;
}

std::string spectrum_text(const Spectrum& sp) {
  std::string s;
  for (std::size_t i = 0; i < sp.distinct(); ++i) {
    if (i) s += ", ";
    s += format_number(sp.eigenvalues[i]);
    if (sp.multiplicities[i] != 1) s += "^" + std::to_string(sp.multiplicities[i]);
  }
  return "{" + s + "}";
}

std::vector<std::uint8_t> flags_line(const ClassificationFlags& f) {
  return {f.walk_regular, f.distance_polynomial, f.quotient_polynomial, f.distance_regular};
}

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>* sink) : sink_(sink) {}
  template <typename F>
  auto run(const char* stage, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      std::vector<StageTiming>* sink;
      const char* stage;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        if (sink)
          sink->push_back({stage, std::chrono::duration<double, std::milli>(
                                      std::chrono::steady_clock::now() - start)
                                      .count()});
      }
    } record{sink_, stage, start};
    return f();
  }

 private:
  std::vector<StageTiming>* sink_;
};

}  // namespace

// ------------------------------------------------------------ pipeline

Report analyze(const Graph& g, const std::string& source, const AnalysisOptions& opts) {
  Report rep;
  rep.source = source;
  rep.graph.n = g.order();
  rep.graph.edges = g.edge_count();
  rep.graph.degrees = g.degrees();
  rep.graph.connected = g.connected() && g.order() > 0;
  if (rep.graph.connected) rep.graph.diameter = g.distance_data().diameter.value();
  if (!rep.graph.connected) {
    try {
      require_connected(g, "partitions");
    } catch (const Error& e) {
      rep.error = ErrorInfo{e.module(), e.kind(), e.what()};
    }
    return rep;
  }

  Stopwatch clock(opts.timing ? &rep.timing : nullptr);
  const Tolerances& tol = opts.tolerances;
  PowerLadder ladder(g);

  QuotientOptions qopts;
  qopts.debug_checks = opts.debug_checks;
  rep.quotient = clock.run("quotient", [&] { return decide_quotient_polynomial(g, ladder, qopts); });
  const QuotientReport& q = *rep.quotient;

  if (q.is_quotient_polynomial) {
    rep.per_vertex_consistent = clock.run("per_vertex", [&] { return per_vertex_consistency(g, q); });
    if (!*rep.per_vertex_consistent)
      throw ContractViolation("quotient-analysis",
                              "a vertex induces a partition that disagrees with the global one");
  }

  rep.spectral = clock.run("spectral", [&] {
    SpectralSummary s;
    const SpectralDecomposition sd = spectral_decomposition(g, q.d + 1, tol);
    const double scale = sd.spectrum.eigenvalues.front();
    const PairPartition sp = spectrum_partition(g, sd, tol.partition);
    s.partition_matches = same_set_partition(sp, q.partition);
    if (!s.partition_matches)
      throw ToleranceError("spectral", "spectrum partition differs from the walk partition");

    if (q.intersection_matrix) {
      const LocalPartition lp = local_partition(q.partition, 0);
      std::vector<std::size_t> sizes;
      for (const auto& c : lp.cells) sizes.push_back(c.size());
      for (double mu : quotient_eigenvalues(q.intersection_matrix->b, sizes)) {
        double best = INFINITY;
        for (double lambda : sd.spectrum.eigenvalues) best = std::min(best, std::fabs(mu - lambda));
        if (best > tol.containment * std::max(1.0, std::fabs(scale)))
          throw ToleranceError("spectral", "eigenvalue " + format_number(mu) +
                                               " of B is not an eigenvalue of A");
      }
    }

    if (q.polynomials) {
      const auto& p = *q.polynomials;
      double worst = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          const double exact = graph_scalar_product(g, sd.spectrum, p[i], p[j], tol);
          if (exact != 0)
            throw ContractViolation("spectral", "quotient polynomials p" + std::to_string(i) +
                                                    " and p" + std::to_string(j) +
                                                    " are not orthogonal");
          const auto numeric = spectral_scalar_product(sd.spectrum, p[i], p[j]);
          worst = std::max(worst, static_cast<double>(std::fabs(numeric.value)));
        }
      s.max_scalar_product_off_diagonal = rounded(worst, 1e9);
      double err = 0;
      const IntegerMatrix& b = q.intersection_matrix->b;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
          const double e = std::fabs(b_via_trace(g, p, i, j) - b(i, j).get_d());
          if (e > tol.trace_ratio)
            throw ToleranceError("spectral", "trace formula misses b_" + std::to_string(i) +
                                                 std::to_string(j));
          err = std::max(err, e);
        }
      s.max_trace_ratio_error = rounded(err, 1e9);
    }

    s.spectrum.multiplicities = sd.spectrum.multiplicities;
    for (double lambda : sd.spectrum.eigenvalues)
      s.spectrum.eigenvalues.push_back(rounded(lambda, std::fabs(scale)));
    return s;
  });

  rep.flags = clock.run("classify", [&] { return classify(g, ladder, q); });

  if (q.is_quotient_polynomial) {
    rep.scheme = clock.run("scheme", [&] {
      SchemeOptions sopts;
      sopts.solve_witness = opts.debug_checks;
      AssociationScheme s = build_scheme(q, q.partition, sopts);
      if (!generates_scheme_check(s, g))
        throw ContractViolation("classify-schemes",
                                "the adjacency algebra differs from the scheme's algebra");
      return s;
    });
  }

  if (opts.orbits) {
    rep.orbits = clock.run("orbits", [&] {
      OrbitSummary o;
      const AutomorphismList auts = automorphisms(g, opts.automorphism_cap);
      const OrbitPartition op = orbit_partition(auts, g.order());
      o.automorphism_count = auts.size();
      o.orbit_count = op.count;
      o.orbit_polynomial = is_orbit_polynomial(g, op);
      o.refines_walk_partition = refines(op, q.partition);
      return o;
    });
    rep.flags->orbit_polynomial = rep.orbits->orbit_polynomial;
  }
  return rep;
}

Report analyze(const GraphSpec& spec, const AnalysisOptions& opts) {
  return analyze(load_graph(spec), spec.describe(), opts);
}

// ------------------------------------------------------------ JSON

json polynomial_to_json(const Polynomial& p) {
  json j = json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_string(c));
  return j;
}

Polynomial polynomial_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (c.is_string())
      coeffs.push_back(parse_rational(c.get<std::string>()));
    else
      coeffs.emplace_back(integer_from_json(c));
  }
  return Polynomial(std::move(coeffs));
}

json partition_to_json(const PairPartition& p) {
  json classes = json::array();
  const auto pairs = p.classes();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json c;
    c["distance"] = p.class_distance[i];
    c["size"] = pairs[i].size();
    json w = json::array();
    if (i < p.class_walk_vector.size())
      for (const auto& x : p.class_walk_vector[i]) w.push_back(to_string(x));
    c["walk_vector"] = std::move(w);
    json list = json::array();
    for (const auto& [u, v] : pairs[i]) list.push_back({u, v});
    c["pairs"] = std::move(list);
    classes.push_back(std::move(c));
  }
  return {{"n", p.n}, {"classes", std::move(classes)}};
}

PairPartition partition_from_json(const json& j) {
  PairPartition p;
  p.n = j.at("n").get<std::size_t>();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  p.class_of.assign(p.n * p.n, kUnset);
  bool keyed = false;
  const auto& classes = j.at("classes");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    p.class_distance.push_back(c.at("distance").get<std::uint32_t>());
    WalkVector w;
    for (const auto& x : c.at("walk_vector")) w.push_back(parse_integer(x.get<std::string>()));
    keyed = keyed || !w.empty();
    p.class_walk_vector.push_back(std::move(w));
    for (const auto& pair : c.at("pairs")) {
      const auto u = pair.at(0).get<std::size_t>();
      const auto v = pair.at(1).get<std::size_t>();
      if (u >= p.n || v >= p.n || p.class_of[u * p.n + v] != kUnset)
        throw InputError(kModule, "partition pairs are out of range or repeated");
      p.class_of[u * p.n + v] = i;
    }
  }
  if (std::find(p.class_of.begin(), p.class_of.end(), kUnset) != p.class_of.end())
    throw InputError(kModule, "partition does not cover every pair");
  if (!keyed) p.class_walk_vector.clear();
  return p;
}

json scheme_to_json(const AssociationScheme& s) {
  json mats = json::array();
  for (const auto& m : s.classes) mats.push_back(matrix_to_json(m));
  return {{"classes", s.class_count()}, {"matrices", std::move(mats)}, {"p", s.p}};
}

json to_json(const Report& r) {
  json j;
  j["source"] = r.source;
  j["graph"] = {{"n", r.graph.n},
                {"edges", r.graph.edges},
                {"degrees", r.graph.degrees},
                {"connected", r.graph.connected},
                {"diameter", optional_to_json(r.graph.diameter)}};
  j["error"] = r.error ? json{{"module", r.error->module},
                              {"kind", r.error->kind},
                              {"message", r.error->message}}
                       : json(nullptr);
  j["quotient"] = r.quotient ? quotient_to_json(*r.quotient) : json(nullptr);
  j["per_vertex_consistent"] = optional_to_json(r.per_vertex_consistent);
  j["spectral"] = r.spectral ? spectral_to_json(*r.spectral) : json(nullptr);
  j["flags"] = r.flags ? flags_to_json(*r.flags, true) : json(nullptr);
  j["scheme"] = r.scheme ? scheme_to_json(*r.scheme) : json(nullptr);
  j["orbits"] = r.orbits ? json{{"automorphisms", r.orbits->automorphism_count},
                                {"orbits", r.orbits->orbit_count},
                                {"orbit_polynomial", r.orbits->orbit_polynomial},
                                {"refines_walk_partition", r.orbits->refines_walk_partition}}
                         : json(nullptr);
  if (!r.timing.empty()) {
    json t = json::array();
    for (const auto& s : r.timing) t.push_back({{"stage", s.stage}, {"ms", s.milliseconds}});
    j["timing"] = std::move(t);
  }
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.source = j.at("source").get<std::string>();
    const auto& g = j.at("graph");
    r.graph.n = g.at("n").get<std::size_t>();
    r.graph.edges = g.at("edges").get<std::size_t>();
    r.graph.degrees = g.at("degrees").get<std::vector<std::size_t>>();
    r.graph.connected = g.at("connected").get<bool>();
    if (!g.at("diameter").is_null()) r.graph.diameter = g.at("diameter").get<std::size_t>();
    if (!j.at("error").is_null())
      r.error = ErrorInfo{j.at("error").at("module").get<std::string>(),
                          j.at("error").at("kind").get<std::string>(),
                          j.at("error").at("message").get<std::string>()};
    if (!j.at("quotient").is_null()) r.quotient = quotient_from_json(j.at("quotient"));
    if (!j.at("per_vertex_consistent").is_null())
      r.per_vertex_consistent = j.at("per_vertex_consistent").get<bool>();
    if (!j.at("spectral").is_null()) r.spectral = spectral_from_json(j.at("spectral"));
    if (!j.at("flags").is_null()) r.flags = flags_from_json(j.at("flags"));
    if (!j.at("scheme").is_null()) r.scheme = scheme_from_json(j.at("scheme"));
    if (!j.at("orbits").is_null()) {
      const auto& o = j.at("orbits");
      r.orbits = OrbitSummary{o.at("automorphisms").get<std::size_t>(),
                              o.at("orbits").get<std::size_t>(),
                              o.at("orbit_polynomial").get<bool>(),
                              o.at("refines_walk_partition").get<bool>()};
    }
    if (j.contains("timing"))
      for (const auto& t : j.at("timing"))
        r.timing.push_back({t.at("stage").get<std::string>(), t.at("ms").get<double>()});
    return r;
  } catch (const json::exception& e) {
    throw InputError(kModule, std::string("malformed report JSON: ") + e.what());
  }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------ text

void render_summary(std::ostream& out, const Report& r) {
  out << "graph: " << r.source << '\n';
  out << "  vertices " << r.graph.n << ", edges " << r.graph.edges << ", degrees "
      << degree_summary(r.graph.degrees) << ", diameter "
      << (r.graph.diameter ? std::to_string(*r.graph.diameter) : std::string("infinite")) << '\n';
  if (r.error) {
    out << "error (" << r.error->kind << " in " << r.error->module << "): " << r.error->message
        << '\n';
    return;
  }
  if (r.quotient) {
    const auto& q = *r.quotient;
    out << "  d = " << q.d << ", r = " << q.r << ", D = " << q.diameter << '\n';
  }
  if (r.flags) {
    const auto& f = *r.flags;
    out << "quotient-polynomial: " << yes_no(f.quotient_polynomial) << '\n';
    out << "walk-regular:        " << yes_no(f.walk_regular) << '\n';
    out << "distance-polynomial: " << yes_no(f.distance_polynomial) << '\n';
    out << "distance-regular:    " << yes_no(f.distance_regular) << '\n';
    out << "orbit-polynomial:    "
        << (f.orbit_polynomial ? yes_no(*f.orbit_polynomial) : std::string("not computed")) << '\n';
    out << "h-punctually walk-regular for h =";
    bool any = false;
    for (std::size_t h = 0; h < f.h_punctual.size(); ++h)
      if (f.h_punctual[h]) {
        out << ' ' << h;
        any = true;
      }
    out << (any ? "" : " none") << '\n';
  }
  if (r.spectral) out << "spectrum: " << spectrum_text(r.spectral->spectrum) << '\n';
  if (r.orbits)
    out << "automorphisms: " << r.orbits->automorphism_count << ", orbits on pairs: "
        << r.orbits->orbit_count << ", orbits refine walk classes: "
        << yes_no(r.orbits->refines_walk_partition) << '\n';
}

void render_partition(std::ostream& out, const Report& r) {
  if (!r.quotient) return;
  const auto& q = *r.quotient;
  const auto& p = q.partition;
  const auto sizes = p.class_sizes();
  out << "walk partition: " << p.size() << " classes\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  J" << i << ": distance " << p.class_distance[i] << ", " << sizes[i] << " pairs";
    if (i < p.class_walk_vector.size()) {
      out << ", w = (";
      for (std::size_t l = 0; l < p.class_walk_vector[i].size(); ++l)
        out << (l ? ", " : "") << to_string(p.class_walk_vector[i][l]);
      out << ')';
    }
    out << '\n';
  }
  const LocalPartition lp = local_partition(p, 0);
  out << "cells around vertex 0:\n";
  for (std::size_t i = 0; i < lp.size(); ++i) {
    out << "  U" << i << " = {";
    for (std::size_t k = 0; k < lp.cells[i].size(); ++k) out << (k ? ", " : "") << lp.cells[i][k];
    out << "}\n";
  }
  if (q.walk_counts) {
    out << "W =\n";
    print_matrix(out, q.walk_counts->w, "  ");
    out << "W+ =\n";
    print_matrix(out, q.walk_counts->w_plus, "  ");
  }
  if (q.intersection_matrix) {
    out << "B^T =\n";
    print_matrix(out, q.intersection_matrix->b.transpose(), "  ");
  }
}

void render_polynomials(std::ostream& out, const Report& r) {
  if (!r.quotient) return;
  const auto& q = *r.quotient;
  if (q.polynomials) {
    out << "quotient polynomials:\n";
    for (std::size_t i = 0; i < q.polynomials->size(); ++i)
      out << "  p" << i << "(x) = " << (*q.polynomials)[i].to_string() << '\n';
  } else {
    out << "quotient polynomials: none (r = " << q.r << " > d = " << q.d << ")\n";
  }
  if (q.hoffman) out << "  H(x) = " << q.hoffman->to_string() << '\n';
  if (r.flags && r.flags->distance_polys) {
    out << "distance polynomials (A_i = p_i(A)):\n";
    for (std::size_t i = 0; i < r.flags->distance_polys->size(); ++i)
      out << "  p" << i << "(x) = " << (*r.flags->distance_polys)[i].to_string() << '\n';
  } else if (r.flags) {
    out << "distance polynomials: none (not distance-polynomial)\n";
  }
}

void render_scheme(std::ostream& out, const Report& r) {
  if (!r.scheme) {
    out << "association scheme: none (not quotient-polynomial)\n";
    return;
  }
  const auto& s = *r.scheme;
  const std::size_t m = s.classes.size();
  out << "association scheme: " << s.class_count() << " classes\n";
  for (std::size_t k = 0; k < m; ++k) {
    IntegerMatrix pk(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) pk(i, j) = Integer(static_cast<long>(s.p[k][i][j]));
    out << "  p^" << k << "_ij (row i, column j):\n";
    print_matrix(out, pk, "    ");
  }
}

void render_text(std::ostream& out, const Report& r) {
  render_summary(out, r);
  if (r.error) return;
  render_partition(out, r);
  render_polynomials(out, r);
  render_scheme(out, r);
  for (const auto& t : r.timing) out << "time " << t.stage << ": " << t.milliseconds << " ms\n";
}

// ------------------------------------------------------------ census

CensusResult census(std::istream& in, const AnalysisOptions& opts) {
  CensusResult out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const InputError& e) {
      out.errors.push_back({number, e.kind(), e.what()});
      continue;
    }
    if (g.order() == 0 || !g.connected()) {
      ++out.skipped_disconnected;
      continue;
    }
    PowerLadder ladder(g);
    QuotientOptions qopts;
    qopts.debug_checks = opts.debug_checks;
    const QuotientReport q = decide_quotient_polynomial(g, ladder, qopts);
    CensusRecord rec;
    rec.line = number;
    rec.graph6 = to_graph6(g);
    rec.n = g.order();
    rec.d = q.d;
    rec.r = q.r;
    rec.diameter = q.diameter;
    rec.flags = classify(g, ladder, q);
    rec.flags.distance_polys.reset();
    if (opts.orbits && g.order() <= opts.automorphism_cap) {
      const OrbitPartition op = orbit_partition(automorphisms(g, opts.automorphism_cap), g.order());
      rec.flags.orbit_polynomial = is_orbit_polynomial(g, op);
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

json to_json(const CensusResult& c) {
  json records = json::array();
  std::size_t wr = 0, dp = 0, qp = 0, drg = 0, op = 0;
  for (const auto& rec : c.records) {
    records.push_back({{"line", rec.line},
                       {"graph6", rec.graph6},
                       {"n", rec.n},
                       {"d", rec.d},
                       {"r", rec.r},
                       {"D", rec.diameter},
                       {"flags", flags_to_json(rec.flags, false)}});
    wr += rec.flags.walk_regular;
    dp += rec.flags.distance_polynomial;
    qp += rec.flags.quotient_polynomial;
    drg += rec.flags.distance_regular;
    op += rec.flags.orbit_polynomial.value_or(false);
  }
  json errors = json::array();
  for (const auto& e : c.errors)
    errors.push_back({{"line", e.line}, {"kind", e.kind}, {"message", e.message}});
  json j;
  j["records"] = std::move(records);
  j["summary"] = {{"graphs", c.records.size()},
                  {"walk_regular", wr},
                  {"distance_polynomial", dp},
                  {"quotient_polynomial", qp},
                  {"distance_regular", drg},
                  {"orbit_polynomial", op}};
  j["skipped_disconnected"] = c.skipped_disconnected;
  j["errors"] = std::move(errors);
  return j;
}

void render_text(std::ostream& out, const CensusResult& c) {
  out << "line  graph6  n  d  r  D  WR DP QP DRG OP\n";
  std::size_t counts[5] = {0, 0, 0, 0, 0};
  for (const auto& rec : c.records) {
    out << rec.line << "  " << rec.graph6 << "  " << rec.n << "  " << rec.d << "  " << rec.r
        << "  " << rec.diameter;
    const auto bits = flags_line(rec.flags);
    for (std::size_t k = 0; k < bits.size(); ++k) {
      out << "  " << (bits[k] ? 'y' : '-');
      counts[k] += bits[k];
    }
    if (rec.flags.orbit_polynomial) {
      out << "  " << (*rec.flags.orbit_polynomial ? 'y' : '-');
      counts[4] += *rec.flags.orbit_polynomial;
    } else {
      out << "  .";
    }
    out << '\n';
  }
  out << "graphs " << c.records.size() << ": walk-regular " << counts[0]
      << ", distance-polynomial " << counts[1] << ", quotient-polynomial " << counts[2]
      << ", distance-regular " << counts[3] << ", orbit-polynomial " << counts[4] << '\n';
  out << "skipped disconnected: " << c.skipped_disconnected << ", errors: " << c.errors.size()
      << '\n';
  for (const auto& e : c.errors) out << "  line " << e.line << ": " << e.message << '\n';
}

}  // namespace quograph
