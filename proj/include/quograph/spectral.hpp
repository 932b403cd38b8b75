#pragma once

// Floating-point mirror of the exact path: distinct eigenvalues, minimal
// idempotents E_j, crossed local multiplicities m_uv(lambda_j), the
// spectrum-regular partition, the graph scalar product and the trace formula
// for intersection numbers. The exact distinct-eigenvalue count is always
// authoritative; numeric results are validated against it.

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "quograph/graph.hpp"
#include "quograph/linalg.hpp"
#include "quograph/partition.hpp"

namespace quograph {

// Every numeric comparison in the library reads its threshold from here.
struct Tolerances {
  double eigen_gap = 1e-8;       // grouping gap, relative to max(1, lambda_0)
  double partition = 1e-8;       // component-wise, on m(u,v)
  double idempotent = 1e-8;      // E_j^2 = E_j, sum E_j = I
  double reconstruction = 1e-6;  // sum lambda_j E_j = A, relative to lambda_0
  double scalar_product = 1e-9;  // relative to the Horner error bound
  double trace_ratio = 1e-9;     // b_via_trace against the exact B
  double containment = 1e-8;     // eigenvalues of B inside spec A

  // Defaults, with `partition` overridden by QUOGRAPH_TOL when set.
  static Tolerances from_environment();
};

struct Spectrum {
  std::vector<double> eigenvalues;         // strictly descending
  std::vector<std::size_t> multiplicities;  // sum to n

  std::size_t distinct() const noexcept { return eigenvalues.size(); }
};

struct SpectralDecomposition {
  Spectrum spectrum;
  std::vector<Eigen::MatrixXd> idempotents;  // E_j, same order as eigenvalues
};

// Groups the eigenvalues and checks the count against `exact_distinct`
// (d+1 from the exact algebra dimension); ToleranceError on mismatch.
SpectralDecomposition spectral_decomposition(const Graph& g, std::size_t exact_distinct,
                                             const Tolerances& tol = {});
SpectralDecomposition spectral_decomposition(const Graph& g, const Tolerances& tol = {});

// (E_0)_uv, ..., (E_d)_uv.
std::vector<double> crossed_multiplicities(const SpectralDecomposition& sd, Vertex u, Vertex v);

// Pairs grouped by m(u,v) under a component-wise tolerance. Classes are
// ordered by distance, then by first appearance; class_walk_vector is empty.
PairPartition spectrum_partition(const Graph& g, const SpectralDecomposition& sd, double tol);

// <f,h> = (1/n) tr(f(A) h(A)) computed exactly, checked against
// (1/n) sum m_i f(lambda_i) h(lambda_i).
double graph_scalar_product(const Graph& g, const Spectrum& sp, const Polynomial& f,
                            const Polynomial& h, const Tolerances& tol = {});
Rational exact_scalar_product(const Graph& g, const Polynomial& f, const Polynomial& h);
// (1/n) sum m_i f(lambda_i) h(lambda_i), and the matching Horner error
// bound (1/n) sum m_i |f|(|lambda_i|) |h|(|lambda_i|).
struct SpectralValue {
  long double value = 0;
  long double bound = 0;
};
SpectralValue spectral_scalar_product(const Spectrum& sp, const Polynomial& f, const Polynomial& h);

// b_ij = tr(A V_i V_j) / tr(V_i^2) with V_k = polys[k](A).
double b_via_trace(const Graph& g, const std::vector<Polynomial>& polys, std::size_t i,
                   std::size_t j);

// Eigenvalues of a quotient matrix B of an equitable partition with the
// given cell sizes, via the similar symmetric matrix D^1/2 B D^-1/2.
std::vector<double> quotient_eigenvalues(const IntegerMatrix& b,
                                         const std::vector<std::size_t>& cell_sizes);

}  // namespace quograph
