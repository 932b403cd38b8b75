#pragma once

// Graph ingestion: graph6 strings, circulant descriptors, whitespace
// separated edge lists and a few named families.

#include <cstddef>
#include <string>
#include <string_view>

#include "quograph/graph.hpp"

namespace quograph {

// Largest vertex count accepted from text input. Everything downstream is
// dense, so this is already far beyond what the exact pipeline can handle.
inline constexpr std::size_t kMaxParsedOrder = 4096;

// Standard graph6: vertex count from the leading bytes, then the upper
// triangle column by column, six bits per printable byte (offset 63).
// An optional ">>graph6<<" header and trailing newline are accepted.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// "circulant:<n>:<s1>,<s2>,..."
Graph parse_circulant(std::string_view desc);

// "u v" per line; an optional first line "n m" is a header exactly when it
// is followed by m edge lines. '#' starts a comment. Without a header the
// vertex count is one more than the largest label.
Graph parse_edge_list(std::string_view text);

// petersen, y6, complete:N, cycle:N, path:N, star:N, prism:K
Graph named_graph(std::string_view name);

struct GraphSpec {
  enum class Kind { edge_list_file, graph6, circulant, named };
  Kind kind = Kind::named;
  std::string value;  // file path, graph6 string, full descriptor, or name

  // The text it was parsed from, e.g. "circulant:17:1,4".
  std::string describe() const;
};

// "circulant:...", "g6:<str>" / "graph6:<str>", "named:<name>", or else a
// path to an edge-list file.
GraphSpec parse_graph_spec(std::string_view text);
Graph load_graph(const GraphSpec& spec);

}  // namespace quograph
