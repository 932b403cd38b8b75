#pragma once

// Walk vectors, the walk-regular partition of V x V, the partitions of V it
// induces around each vertex, and the regularity predicates on them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quograph/algebra.hpp"
#include "quograph/graph.hpp"
#include "quograph/linalg.hpp"

namespace quograph {

// (a_uv^(0), ..., a_uv^(d)): numbers of walks of each length from u to v.
using WalkVector = std::vector<Integer>;

struct WalkTable {
  std::size_t n = 0;
  std::vector<WalkVector> vectors;  // row-major n x n

  const WalkVector& operator()(Vertex u, Vertex v) const { return vectors[u * n + v]; }
};

// A partition {J_0, ..., J_r} of V x V. Classes are ordered canonically:
// by distance of their pairs, and within one distance by walk vector in
// descending lexicographic order. Diagonal classes therefore come first.
struct PairPartition {
  std::size_t n = 0;
  std::vector<std::size_t> class_of;        // row-major n x n
  std::vector<std::uint32_t> class_distance;
  std::vector<WalkVector> class_walk_vector;  // empty when not keyed by walks

  std::size_t size() const noexcept { return class_distance.size(); }
  std::size_t operator()(Vertex u, Vertex v) const { return class_of[u * n + v]; }

  std::vector<std::vector<Edge>> classes() const;
  std::vector<std::size_t> class_sizes() const;
  IntegerMatrix class_matrix(std::size_t i) const;
  std::vector<IntegerMatrix> class_matrices() const;
  // Number of classes containing diagonal pairs; 1 iff J_0 = I.
  std::size_t diagonal_class_count() const;
};

// True when the two partitions group pairs identically, ignoring labels.
bool same_set_partition(const PairPartition& a, const PairPartition& b);

// Cells U_0 = {center}, U_1, ..., with cell_class[i] the index of the
// global class J_k whose row at `center` is cell i. Cells need not come
// from a pair partition; the predicates below accept any cover of V.
struct LocalPartition {
  Vertex center = 0;
  std::vector<std::vector<Vertex>> cells;
  std::vector<std::size_t> cell_class;

  std::size_t size() const noexcept { return cells.size(); }
  // 0/1 vector of cell i over V.
  std::vector<Integer> characteristic_vector(std::size_t i, std::size_t n) const;
};

// b_ij = |Gamma(u) & U_j| for any u in U_i.
struct QuotientMatrixB {
  IntegerMatrix b;
  friend bool operator==(const QuotientMatrixB&, const QuotientMatrixB&) = default;
};

struct PartitionOptions {
  // Recompute walk vectors to length 2d+1 and fail if that refines the
  // partition.
  bool extended_check = false;
};

WalkTable walk_vectors(const Graph& g, std::size_t d);
WalkTable walk_vectors(PowerLadder& ladder, std::size_t length);

PairPartition global_partition(const Graph& g, const PartitionOptions& opts = {});
PairPartition global_partition(const Graph& g, PowerLadder& ladder, std::size_t d,
                               const PartitionOptions& opts = {});

LocalPartition local_partition(const PairPartition& p, Vertex u);

bool is_distance_faithful(const LocalPartition& lp, const DistanceData& dd);

// The partition {Gamma_0(u), ..., Gamma_e(u)}.
LocalPartition distance_partition(const Graph& g, Vertex u);

// Counts neighbours cell by cell; nullopt when the counts vary inside a cell.
std::optional<QuotientMatrixB> check_regular(const Graph& g, const LocalPartition& lp);

// Throws AnalysisError unless g is non-empty and connected.
void require_connected(const Graph& g, const char* module);

}  // namespace quograph
