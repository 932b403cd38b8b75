#include "quograph/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <vector>

#include "quograph/errors.hpp"

namespace quograph {

namespace {

constexpr const char* kModule = "cli";

std::size_t parse_count(std::string_view text, std::size_t offset, const char* what) {
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw ParseError(kModule, std::string("expected a non-negative integer for ") + what + ", got '" +
                                  std::string(text) + "'",
                     offset + static_cast<std::size_t>(ptr - first));
  return value;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = strip(line);
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos == line.size()) throw ParseError(kModule, "empty graph6 string", pos);

  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= line.size()) throw ParseError(kModule, "graph6 string ends early", line.size());
    const auto c = static_cast<unsigned char>(line[at]);
    if (c < 63 || c > 126)
      throw ParseError(kModule, "byte " + std::to_string(c) + " is outside the graph6 range 63..126",
                       at);
    return c - 63u;
  };

  std::uint64_t n = 0;
  if (static_cast<unsigned char>(line[pos]) != 126) {
    n = sextet(pos);
    pos += 1;
  } else if (pos + 1 < line.size() && static_cast<unsigned char>(line[pos + 1]) != 126) {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(pos + k);
    pos += 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | sextet(pos + k);
    pos += 8;
  }
  if (n > kMaxParsedOrder)
    throw ParseError(kModule, "graph6 vertex count " + std::to_string(n) + " exceeds " +
                                  std::to_string(kMaxParsedOrder),
                     pos);

  const std::size_t bits = static_cast<std::size_t>(n * (n > 0 ? n - 1 : 0) / 2);
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes)
    throw ParseError(kModule, "graph6 body has " + std::to_string(line.size() - pos) +
                                  " bytes, expected " + std::to_string(bytes),
                     line.size() - pos < bytes ? line.size() : pos + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint64_t chunk = sextet(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph parse_circulant(std::string_view desc) {
  constexpr std::string_view kPrefix = "circulant:";
  if (desc.substr(0, kPrefix.size()) != kPrefix)
    throw ParseError(kModule, "circulant descriptor must start with 'circulant:'", 0);
  std::size_t pos = kPrefix.size();
  const std::size_t colon = desc.find(':', pos);
  if (colon == std::string_view::npos)
    throw ParseError(kModule, "circulant descriptor needs '<n>:<s1>,<s2>,...'", desc.size());
  const std::size_t n = parse_count(desc.substr(pos, colon - pos), pos, "the circulant order");
  if (n == 0 || n > kMaxParsedOrder)
    throw ParseError(kModule, "circulant order must be in 1.." + std::to_string(kMaxParsedOrder),
                     pos);
  pos = colon + 1;
  if (pos >= desc.size()) throw ParseError(kModule, "circulant connection set is empty", pos);
  std::set<std::size_t> connection;
  while (pos <= desc.size()) {
    std::size_t comma = desc.find(',', pos);
    if (comma == std::string_view::npos) comma = desc.size();
    const std::size_t s = parse_count(desc.substr(pos, comma - pos), pos, "a circulant residue");
    if (s == 0 || s >= n)
      throw ParseError(kModule, "circulant residue " + std::to_string(s) + " must lie in 1.." +
                                    std::to_string(n - 1),
                       pos);
    // The connection set is symmetric, so s and n-s name the same edges.
    connection.insert(std::min(s, n - s));
    pos = comma + 1;
  }
  return circulant(n, connection);
}

Graph parse_edge_list(std::string_view text) {
  struct Line {
    std::size_t offset;
    std::size_t a, b;
  };
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::pair<std::size_t, std::string_view>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t t = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > t) tokens.emplace_back(t, line.substr(t, i - t));
    }
    if (!tokens.empty()) {
      if (tokens.size() != 2)
        throw ParseError(kModule, "edge-list line must hold exactly two integers",
                         start + tokens.front().first);
      lines.push_back({start,
                       parse_count(tokens[0].second, start + tokens[0].first, "a vertex label"),
                       parse_count(tokens[1].second, start + tokens[1].first, "a vertex label")});
    }
    start = end + 1;
  }

  std::optional<std::size_t> n;
  std::span<const Line> body(lines);
  if (!lines.empty() && lines.front().b == lines.size() - 1) {
    bool fits = true;
    for (const auto& l : body.subspan(1)) fits = fits && l.a < lines.front().a && l.b < lines.front().a;
    if (fits) {
      n = lines.front().a;
      body = body.subspan(1);
    }
  }
  std::vector<Edge> edges;
  std::size_t largest = 0;
  for (const auto& l : body) {
    if (l.a == l.b) throw ParseError(kModule, "self-loop " + std::to_string(l.a), l.offset);
    edges.emplace_back(l.a, l.b);
    largest = std::max({largest, l.a + 1, l.b + 1});
  }
  const std::size_t order = n.value_or(largest);
  if (order > kMaxParsedOrder)
    throw ParseError(kModule, "edge list names more than " + std::to_string(kMaxParsedOrder) +
                                  " vertices",
                     0);
  return Graph(order, edges);
}

Graph named_graph(std::string_view name) {
  const std::size_t colon = name.find(':');
  const std::string_view family = name.substr(0, colon);
  if (colon == std::string_view::npos) {
    if (family == "petersen") return petersen_graph();
    if (family == "y6") return y6_graph();
    throw ParseError(kModule, "unknown named graph '" + std::string(name) + "'", 0);
  }
  const std::size_t k = parse_count(name.substr(colon + 1), colon + 1, "the family parameter");
  if (k > kMaxParsedOrder) throw ParseError(kModule, "family parameter too large", colon + 1);
  if (family == "complete") return complete_graph(k);
  if (family == "cycle") return cycle_graph(k);
  if (family == "path") return path_graph(k);
  if (family == "star") return star_graph(k);
  if (family == "prism") return prism_graph(k);
  throw ParseError(kModule, "unknown graph family '" + std::string(family) + "'", 0);
}

std::string GraphSpec::describe() const {
  switch (kind) {
    case Kind::edge_list_file:
      return value;
    case Kind::graph6:
      return "g6:" + value;
    case Kind::circulant:
      return value;
    case Kind::named:
      return "named:" + value;
  }
  return value;
}

GraphSpec parse_graph_spec(std::string_view text) {
  auto after = [&](std::string_view prefix) -> std::optional<std::string> {
    if (text.substr(0, prefix.size()) == prefix) return std::string(text.substr(prefix.size()));
    return std::nullopt;
  };
  if (text.empty()) throw ParseError(kModule, "empty graph specification", 0);
  if (text.substr(0, 10) == "circulant:") return {GraphSpec::Kind::circulant, std::string(text)};
  if (auto v = after("g6:")) return {GraphSpec::Kind::graph6, *v};
  if (auto v = after("graph6:")) return {GraphSpec::Kind::graph6, *v};
  if (auto v = after("named:")) return {GraphSpec::Kind::named, *v};
  return {GraphSpec::Kind::edge_list_file, std::string(text)};
}

Graph load_graph(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::graph6:
      return parse_graph6(spec.value);
    case GraphSpec::Kind::circulant:
      return parse_circulant(spec.value);
    case GraphSpec::Kind::named:
      return named_graph(spec.value);
    case GraphSpec::Kind::edge_list_file: {
      std::ifstream in(spec.value, std::ios::binary);
      if (!in) throw InputError(kModule, "cannot open edge-list file '" + spec.value + "'");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return parse_edge_list(buffer.str());
    }
  }
  throw InputError(kModule, "unknown graph specification");
}

}  // namespace quograph
