#pragma once

#include <cstddef>
#include <vector>

#include "quograph/graph.hpp"
#include "quograph/linalg.hpp"

namespace quograph {

// Cached powers A^0, A^1, ... of an adjacency matrix, extended on demand.
// Not safe for concurrent use; each analysis owns its ladder.
class PowerLadder {
 public:
  explicit PowerLadder(const Graph& g);

  const IntegerMatrix& power(std::size_t l);
  const IntegerMatrix& adjacency() const { return powers_[1]; }
  std::size_t order() const { return powers_[0].rows(); }

  // Columns vec(A^0), ..., vec(A^top), suitable as the left-hand side of a
  // membership solve in the adjacency algebra.
  RationalMatrix basis_columns(std::size_t top);

 private:
  std::vector<IntegerMatrix> powers_;
};

// Dimension d+1 of the adjacency algebra: the rank of vec(I), vec(A), ...
// stopping at the first power that adds nothing. Equals the number of
// distinct eigenvalues.
std::size_t algebra_dimension(const Graph& g);
std::size_t algebra_dimension(PowerLadder& ladder);

// Dimension d_u+1 of span{e_u, A e_u, A^2 e_u, ...}.
std::size_t local_dimension(const Graph& g, Vertex u);

}  // namespace quograph
