#include "quograph/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace quograph {

namespace {
constexpr const char* kModule = "graph-core";
}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : n_(n), adj_(n * n, 0), neighbors_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError(kModule, "edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") has an endpoint outside 0.." +
                                    std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw InputError(kModule, "loop at vertex " + std::to_string(u));
    if (adj_[u * n + v]) continue;
    adj_[u * n + v] = adj_[v * n + u] = 1;
    ++edge_count_;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (adj_[u * n + v]) neighbors_[u].push_back(v);
  dist_ = distances(*this);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex u = 0; u < n_; ++u) d[u] = degree(u);
  return d;
}

bool Graph::is_regular() const {
  for (Vertex u = 1; u < n_; ++u)
    if (degree(u) != degree(0)) return false;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

IntegerMatrix Graph::adjacency_matrix() const {
  IntegerMatrix a(n_, n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors_[u]) a(u, v) = 1;
  return a;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph circulant(std::size_t n, const std::set<std::size_t>& connection) {
  std::vector<Edge> edges;
  for (std::size_t s : connection) {
    if (s == 0 || s >= n)
      throw InputError(kModule, "circulant residue " + std::to_string(s) +
                                    " outside 1.." + std::to_string(n / 2));
    for (std::size_t u = 0; u < n; ++u) edges.emplace_back(u, (u + s) % n);
  }
  return Graph(n, edges);
}

DistanceData distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceData dd;
  dd.n = n;
  dd.dist.assign(n * n, Distance::unreachable());
  dd.eccentricity.assign(n, Distance(0));
  dd.connected = true;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    Distance* row = dd.dist.data() + s * n;
    row[s] = Distance(0);
    queue.assign(1, s);
    std::size_t reached = 1;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const std::uint32_t next = row[u].value() + 1;
      for (Vertex v : g.neighbors(u)) {
        if (row[v].finite()) continue;
        row[v] = Distance(next);
        ++reached;
        queue.push_back(v);
      }
    }
    if (reached != n) dd.connected = false;
    dd.eccentricity[s] = *std::max_element(row, row + n);
  }
  dd.diameter = n == 0 ? Distance(0)
                       : *std::max_element(dd.eccentricity.begin(), dd.eccentricity.end());
  return dd;
}

IntegerMatrix distance_class_matrix(const Graph& g, std::size_t i) {
  const auto& dd = g.distance_data();
  if (!dd.connected)
    throw AnalysisError(kModule, "distance matrices need a connected graph");
  if (i > dd.diameter.value())
    throw InputError(kModule, "distance " + std::to_string(i) + " exceeds diameter " +
                                  std::to_string(dd.diameter.value()));
  const std::size_t n = g.order();
  IntegerMatrix m(n, n);
  const Distance target(static_cast<std::uint32_t>(i));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (dd(u, v) == target) m(u, v) = 1;
  return m;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError(kModule, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

Graph prism_graph(std::size_t k) {
  if (k < 3) throw InputError(kModule, "prism needs k >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(k + i, k + (i + 1) % k);
    e.emplace_back(i, k + i);
  }
  return Graph(2 * k, e);
}

Graph chordal_ring(std::size_t n, std::size_t chord) {
  if (n < 4 || n % 2 != 0) throw InputError(kModule, "chordal ring needs even n >= 4");
  if (chord % 2 == 0 || chord < 3 || chord >= n)
    throw InputError(kModule, "chordal ring chord must be odd and in 3..n-1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    if (i % 2 == 1) e.emplace_back(i, (i + chord) % n);
  }
  return Graph(n, e);
}

Graph y6_graph() { return chordal_ring(12, 3); }

}  // namespace quograph
