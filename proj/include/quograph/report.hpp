#pragma once

// The full analysis pipeline and its serialisable result: JSON (lossless,
// deterministic) and a plain-text rendering, plus census over graph6
// streams.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quograph/classify.hpp"
#include "quograph/graph.hpp"
#include "quograph/io.hpp"
#include "quograph/orbits.hpp"
#include "quograph/quotient.hpp"
#include "quograph/spectral.hpp"

namespace quograph {

struct AnalysisOptions {
  bool debug_checks = false;
  bool orbits = false;
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
  bool timing = false;  // off by default so reports stay byte-identical
  Tolerances tolerances = Tolerances::from_environment();
};

struct GraphSummary {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::vector<std::size_t> degrees;
  bool connected = false;
  std::optional<std::size_t> diameter;
  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

// Numeric cross-checks that ran, with the spectrum they used.
struct SpectralSummary {
  Spectrum spectrum;
  bool partition_matches = false;  // spectrum partition == walk partition
  std::optional<double> max_scalar_product_off_diagonal;  // QP only
  std::optional<double> max_trace_ratio_error;            // QP only
  friend bool operator==(const SpectralSummary&, const SpectralSummary&) = default;
};

struct OrbitSummary {
  std::size_t automorphism_count = 0;
  std::size_t orbit_count = 0;
  bool orbit_polynomial = false;
  bool refines_walk_partition = false;
  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

struct ErrorInfo {
  std::string module;
  std::string kind;
  std::string message;
  friend bool operator==(const ErrorInfo&, const ErrorInfo&) = default;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
  friend bool operator==(const StageTiming&, const StageTiming&) = default;
};

struct Report {
  std::string source;
  GraphSummary graph;
  std::optional<QuotientReport> quotient;
  std::optional<bool> per_vertex_consistent;  // QP only
  std::optional<SpectralSummary> spectral;
  std::optional<ClassificationFlags> flags;
  std::optional<AssociationScheme> scheme;  // QP only
  std::optional<OrbitSummary> orbits;
  std::optional<ErrorInfo> error;  // set when the analysis stopped early
  std::vector<StageTiming> timing;
};

// Runs partitions, the quotient decision, spectral cross-checks,
// classification, the generated scheme and optionally the orbit pass.
// A disconnected graph yields a partial report with `error` set; every
// other failure propagates as an exception.
Report analyze(const Graph& g, const std::string& source, const AnalysisOptions& opts = {});
Report analyze(const GraphSpec& spec, const AnalysisOptions& opts = {});

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);
// Two-space indented JSON with a trailing newline.
std::string dump_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json partition_to_json(const PairPartition& p);
PairPartition partition_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json scheme_to_json(const AssociationScheme& s);

// Sections of the text rendering; `render_text` prints all of them.
void render_summary(std::ostream& out, const Report& r);
void render_partition(std::ostream& out, const Report& r);
void render_polynomials(std::ostream& out, const Report& r);
void render_scheme(std::ostream& out, const Report& r);
void render_text(std::ostream& out, const Report& r);

struct CensusRecord {
  std::size_t line = 0;  // 1-based input line
  std::string graph6;
  std::size_t n = 0;
  std::size_t d = 0, r = 0, diameter = 0;
  ClassificationFlags flags;
};

struct CensusError {
  std::size_t line = 0;
  std::string kind;
  std::string message;
};

struct CensusResult {
  std::vector<CensusRecord> records;
  std::vector<CensusError> errors;
  std::size_t skipped_disconnected = 0;
};

// One record per connected graph. Malformed lines become errors and the
// stream carries on. With opts.orbits the orbit pass runs on graphs within
// the automorphism cap.
CensusResult census(std::istream& in, const AnalysisOptions& opts = {});

nlohmann::ordered_json to_json(const CensusResult& c);
void render_text(std::ostream& out, const CensusResult& c);

}  // namespace quograph
