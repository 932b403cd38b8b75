#pragma once

// The quotient-polynomial decision and everything recovered alongside it:
// the polynomials p_i with p_i(A) = J_i, the walk-count matrices W and W+
// around a vertex, the intersection matrix B, and the Hoffman polynomial.

#include <cstddef>
#include <optional>
#include <vector>

#include "quograph/algebra.hpp"
#include "quograph/graph.hpp"
#include "quograph/linalg.hpp"
#include "quograph/partition.hpp"

namespace quograph {

// W(l, i)  = common number of l-walks from the centre to cell i,
// W+(l, i) = the same for l+1, for l, i = 0..r.
struct WalkCountMatrices {
  IntegerMatrix w;
  IntegerMatrix w_plus;
};

struct QuotientOptions {
  bool debug_checks = false;  // extended walk vectors, extra witnesses
};

struct QuotientReport {
  std::size_t d = 0;         // number of distinct eigenvalues minus one
  std::size_t r = 0;         // number of walk classes minus one
  std::size_t diameter = 0;  // D
  bool is_quotient_polynomial = false;
  bool walk_regular = false;  // J_0 = I
  std::vector<std::size_t> local_dimensions;  // d_u for every vertex u

  PairPartition partition;
  // Present iff quotient-polynomial.
  std::optional<std::vector<Polynomial>> polynomials;
  std::optional<WalkCountMatrices> walk_counts;  // around vertex 0, when QP
  // Around vertex 0, whenever that local partition is regular.
  std::optional<QuotientMatrixB> intersection_matrix;
  // H with H(A) = J; exists iff the graph is connected and regular.
  std::optional<Polynomial> hoffman;
};

QuotientReport decide_quotient_polynomial(const Graph& g, const QuotientOptions& opts = {});
QuotientReport decide_quotient_polynomial(const Graph& g, PowerLadder& ladder,
                                          const QuotientOptions& opts = {});

// Requires every cell of `lp` to be walk-homogeneous from its centre.
WalkCountMatrices walk_count_matrices(const Graph& g, Vertex u, const LocalPartition& lp);

// B from B^T = W^-1 W+. Throws AnalysisError when W is singular.
QuotientMatrixB intersection_matrix(const WalkCountMatrices& wm);

// Every vertex induces a quotient-polynomial partition with the same
// polynomials and the same B.
bool per_vertex_consistency(const Graph& g, const QuotientReport& rep);

// Columns of X with basis X = targets, read as polynomials in A; nullopt
// when some target is outside the adjacency algebra.
std::optional<std::vector<Polynomial>> algebra_coordinates(PowerLadder& ladder, std::size_t d,
                                                           std::span<const IntegerMatrix> targets);

}  // namespace quograph
