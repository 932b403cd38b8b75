#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "quograph/linalg.hpp"

namespace quograph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Shortest-path length, or the distinguished "unreachable" marker. There is
// no arithmetic on this type, so an unreachable pair can never masquerade
// as a long path.
class Distance {
 public:
  constexpr Distance() = default;  // unreachable
  constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}

  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool finite() const noexcept { return hops_ != kInf; }
  std::uint32_t value() const {
    if (!finite()) throw AnalysisError("graph-core", "distance is unreachable");
    return hops_;
  }

  friend constexpr bool operator==(Distance, Distance) = default;
  // Unreachable compares greater than every finite distance.
  friend constexpr auto operator<=>(Distance a, Distance b) {
    return a.hops_ <=> b.hops_;
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t hops_ = kInf;
};

struct DistanceData {
  std::size_t n = 0;
  std::vector<Distance> dist;  // row-major n x n
  std::vector<Distance> eccentricity;
  Distance diameter;  // unreachable when disconnected
  bool connected = false;

  Distance operator()(Vertex u, Vertex v) const { return dist[u * n + v]; }
};

// Simple undirected graph on vertices 0..n-1, stored densely, with its
// all-pairs distances computed once at construction. Immutable.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  std::span<const Vertex> neighbors(Vertex u) const { return neighbors_[u]; }
  std::size_t degree(Vertex u) const { return neighbors_[u].size(); }
  std::vector<std::size_t> degrees() const;
  bool is_regular() const;
  std::vector<Edge> edges() const;  // u < v, lexicographic

  const DistanceData& distance_data() const noexcept { return dist_; }
  bool connected() const noexcept { return dist_.connected; }
  Distance dist(Vertex u, Vertex v) const { return dist_(u, v); }

  IntegerMatrix adjacency_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> neighbors_;
  DistanceData dist_;
};

// Validates endpoints, rejects loops, collapses duplicate edges.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

// u ~ u +- s (mod n) for every s in `connection`. Residues in (n/2, n) are
// folded to n - s.
Graph circulant(std::size_t n, const std::set<std::size_t>& connection);

DistanceData distances(const Graph& g);

// 0/1 matrix of pairs at distance exactly i.
IntegerMatrix distance_class_matrix(const Graph& g, std::size_t i);

// Named families.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // K_{1,leaves}, centre 0
Graph petersen_graph();
Graph prism_graph(std::size_t k);  // K2 x C_k: outer i, inner k+i
// Cycle 0..n-1 plus chords i ~ i+chord for odd i.
Graph chordal_ring(std::size_t n, std::size_t chord);
// The 12-vertex prism labelled as the chordal ring (12, 3).
Graph y6_graph();

}  // namespace quograph
