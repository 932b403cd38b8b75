#include "quograph/quotient.hpp"

#include <string>

namespace quograph {

namespace {

constexpr const char* kModule = "quotient-analysis";

bool equals_integer(const RationalMatrix& q, const IntegerMatrix& z) {
  if (q.rows() != z.rows() || q.cols() != z.cols()) return false;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (q(i, j) != z(i, j)) return false;
  return true;
}

}  // namespace

std::optional<std::vector<Polynomial>> algebra_coordinates(
    PowerLadder& ladder, std::size_t d, std::span<const IntegerMatrix> targets) {
  if (targets.empty()) return std::vector<Polynomial>{};
  const RationalMatrix basis = ladder.basis_columns(d);
  const auto x = solve(basis, vectorized_columns(targets));
  if (!x) return std::nullopt;
  std::vector<Polynomial> polys;
  polys.reserve(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    std::vector<Rational> c(d + 1);
    for (std::size_t l = 0; l <= d; ++l) c[l] = (*x)(l, t);
    polys.emplace_back(std::move(c));
  }
  return polys;
}

WalkCountMatrices walk_count_matrices(const Graph& g, Vertex u, const LocalPartition& lp) {
  const std::size_t n = g.order();
  const std::size_t m = lp.size();
  if (m == 0 || lp.cells[0].size() != 1 || lp.cells[0][0] != u)
    throw ContractViolation(kModule, "cell 0 must be the centre alone");

  // x_l = A^l e_u, the l-walk counts from u, for l = 0..r+1.
  std::vector<std::vector<Integer>> x(m + 1, std::vector<Integer>(n, Integer(0)));
  x[0][u] = 1;
  for (std::size_t l = 1; l <= m; ++l)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.neighbors(v)) x[l][v] += x[l - 1][w];

  WalkCountMatrices wm{IntegerMatrix(m, m), IntegerMatrix(m, m)};
  for (std::size_t i = 0; i < m; ++i) {
    const auto& cell = lp.cells[i];
    if (cell.empty()) throw ContractViolation(kModule, "empty cell");
    for (std::size_t l = 0; l <= m; ++l)
      for (Vertex v : cell)
        if (x[l][v] != x[l][cell.front()])
          throw ContractViolation(kModule, "cell " + std::to_string(i) +
                                               " is not walk-homogeneous at length " +
                                               std::to_string(l));
    for (std::size_t l = 0; l < m; ++l) {
      wm.w(l, i) = x[l][cell.front()];
      wm.w_plus(l, i) = x[l + 1][cell.front()];
    }
  }
  return wm;
}

QuotientMatrixB intersection_matrix(const WalkCountMatrices& wm) {
  const std::size_t m = wm.w.rows();
  if (rank(wm.w) < m)
    throw AnalysisError(kModule, "W is singular: partition not quotient-polynomial around u");
  const auto bt = solve(to_rational(wm.w), to_rational(wm.w_plus));
  if (!bt) throw ContractViolation(kModule, "W B^T = W+ has no solution for invertible W");
  const auto integral = to_integer(*bt);
  if (!integral) throw ContractViolation(kModule, "W^-1 W+ has a non-integer entry");
  for (const auto& z : integral->flat())
    if (z < 0) throw ContractViolation(kModule, "W^-1 W+ has a negative entry");
  return QuotientMatrixB{integral->transpose()};
}

QuotientReport decide_quotient_polynomial(const Graph& g, const QuotientOptions& opts) {
  require_connected(g, kModule);
  PowerLadder ladder(g);
  return decide_quotient_polynomial(g, ladder, opts);
}

QuotientReport decide_quotient_polynomial(const Graph& g, PowerLadder& ladder,
                                          const QuotientOptions& opts) {
  require_connected(g, kModule);
  const std::size_t n = g.order();
  QuotientReport rep;
  rep.d = algebra_dimension(ladder) - 1;
  rep.diameter = g.distance_data().diameter.value();
  if (rep.d < rep.diameter)
    throw ContractViolation(kModule, "fewer distinct eigenvalues than diameter + 1");

  rep.partition = global_partition(g, ladder, rep.d, {.extended_check = opts.debug_checks});
  rep.r = rep.partition.size() - 1;
  if (rep.r < rep.d) throw ContractViolation(kModule, "walk partition has r < d");
  rep.walk_regular = rep.partition.diagonal_class_count() == 1;
  rep.is_quotient_polynomial = rep.r == rep.d;

  rep.local_dimensions.reserve(n);
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t du = local_dimension(g, u) - 1;
    if (du > rep.d) throw ContractViolation(kModule, "local dimension exceeds d");
    rep.local_dimensions.push_back(du);
  }

  const std::vector<IntegerMatrix> classes = rep.partition.class_matrices();
  const IntegerMatrix& a = ladder.adjacency();

  if (rep.is_quotient_polynomial) {
    auto polys = algebra_coordinates(ladder, rep.d, classes);
    if (!polys) throw ContractViolation(kModule, "r = d but some J_i is outside the algebra");
    for (std::size_t i = 0; i < polys->size(); ++i)
      if (!equals_integer(eval_poly((*polys)[i], a), classes[i]))
        throw ContractViolation(kModule, "p_" + std::to_string(i) + "(A) != J_" +
                                             std::to_string(i));
    if (!rep.walk_regular)
      throw ContractViolation(kModule, "quotient-polynomial graph with J_0 != I");
    rep.polynomials = std::move(polys);
  }

  const LocalPartition lp0 = local_partition(rep.partition, 0);
  rep.intersection_matrix = check_regular(g, lp0);
  if (rep.is_quotient_polynomial) {
    rep.walk_counts = walk_count_matrices(g, 0, lp0);
    const QuotientMatrixB via_w = intersection_matrix(*rep.walk_counts);
    if (!rep.intersection_matrix || !(*rep.intersection_matrix == via_w))
      throw ContractViolation(kModule, "W^-1 W+ disagrees with direct neighbour counts");
  }

  const IntegerMatrix all_ones = IntegerMatrix::ones(n, n);
  if (auto h = algebra_coordinates(ladder, rep.d, std::span(&all_ones, 1))) {
    rep.hoffman = h->front();
    if (!equals_integer(eval_poly(*rep.hoffman, a), all_ones))
      throw ContractViolation(kModule, "H(A) != J");
  }
  if (rep.is_quotient_polynomial) {
    Polynomial sum;
    for (const auto& p : *rep.polynomials) sum += p;
    if (!rep.hoffman || !(sum == *rep.hoffman))
      throw ContractViolation(kModule, "sum of quotient polynomials is not the Hoffman polynomial");
  }
  return rep;
}

bool per_vertex_consistency(const Graph& g, const QuotientReport& rep) {
  if (!rep.is_quotient_polynomial || !rep.polynomials || !rep.intersection_matrix)
    throw InputError(kModule, "per_vertex_consistency needs a quotient-polynomial report");
  const std::size_t n = g.order();
  const IntegerMatrix a = g.adjacency_matrix();
  std::vector<RationalMatrix> evaluated;
  for (const auto& p : *rep.polynomials) evaluated.push_back(eval_poly(p, a));

  for (Vertex u = 0; u < n; ++u) {
    const LocalPartition lp = local_partition(rep.partition, u);
    if (lp.size() != rep.d + 1) return false;
    for (std::size_t i = 0; i < lp.size(); ++i) {
      if (lp.cell_class[i] != i) return false;
      const auto chi = lp.characteristic_vector(i, n);
      for (Vertex v = 0; v < n; ++v)
        if (evaluated[i](v, u) != chi[v]) return false;
    }
    if (local_dimension(g, u) != lp.size()) return false;
    const auto counted = check_regular(g, lp);
    if (!counted || !(*counted == *rep.intersection_matrix)) return false;
    try {
      if (!(intersection_matrix(walk_count_matrices(g, u, lp)) == *rep.intersection_matrix))
        return false;
    } catch (const AnalysisError&) {
      return false;
    }
  }
  return true;
}

}  // namespace quograph
