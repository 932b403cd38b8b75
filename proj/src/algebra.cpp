#include "quograph/algebra.hpp"

namespace quograph {

PowerLadder::PowerLadder(const Graph& g) {
  powers_.push_back(IntegerMatrix::identity(g.order()));
  powers_.push_back(g.adjacency_matrix());
}

const IntegerMatrix& PowerLadder::power(std::size_t l) {
  while (powers_.size() <= l) powers_.push_back(mat_mul(powers_.back(), powers_[1]));
  return powers_[l];
}

RationalMatrix PowerLadder::basis_columns(std::size_t top) {
  power(top);
  return vectorized_columns(std::span<const IntegerMatrix>(powers_.data(), top + 1));
}

std::size_t algebra_dimension(PowerLadder& ladder) {
  const std::size_t n = ladder.order();
  RowSpace space(n * n);
  std::size_t l = 0;
  while (space.add(ladder.power(l).flat())) ++l;
  return space.dimension();
}

std::size_t algebra_dimension(const Graph& g) {
  PowerLadder ladder(g);
  return algebra_dimension(ladder);
}

std::size_t local_dimension(const Graph& g, Vertex u) {
  const std::size_t n = g.order();
  if (u >= n) throw InputError("quotient-analysis", "vertex out of range");
  RowSpace space(n);
  std::vector<Integer> x(n, Integer(0));
  x[u] = 1;
  std::vector<Integer> next(n);
  while (space.add(x)) {
    for (Vertex v = 0; v < n; ++v) {
      next[v] = 0;
      for (Vertex w : g.neighbors(v)) next[v] += x[w];
    }
    x.swap(next);
  }
  return space.dimension();
}

}  // namespace quograph
