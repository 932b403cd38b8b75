#pragma once

// Published reference values for the two worked examples: the circulant
// Cay(Z_17; +-1, +-4) and the 12-vertex prism Y6.

#include <initializer_list>
#include <vector>

#include "quograph/graph.hpp"
#include "quograph/linalg.hpp"

namespace fixtures {

using quograph::IntegerMatrix;
using quograph::Polynomial;
using quograph::Rational;

inline IntegerMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// (1/den) (c_m x^m + ... + c_0), coefficients listed from the top degree.
inline Polynomial poly(long den, std::initializer_list<long> descending) {
  std::vector<Rational> asc(descending.size());
  std::size_t k = descending.size();
  for (long c : descending) asc[--k] = Rational(c, den);
  for (auto& c : asc) c.canonicalize();
  return Polynomial(asc);
}

// ---- Cay(Z_17; +-1, +-4) around vertex 0.
inline IntegerMatrix cay17_w() {
  return matrix({{1, 0, 0, 0, 0},
                 {0, 1, 0, 0, 0},
                 {4, 0, 2, 1, 0},
                 {0, 9, 1, 3, 3},
                 {36, 5, 24, 16, 10}});
}
inline IntegerMatrix cay17_w_plus() {
  return matrix({{0, 1, 0, 0, 0},
                 {4, 0, 2, 1, 0},
                 {0, 9, 1, 3, 3},
                 {36, 5, 24, 16, 10},
                 {20, 100, 36, 55, 60}});
}
inline IntegerMatrix cay17_b_transpose() {
  return matrix({{0, 1, 0, 0, 0},
                 {4, 0, 2, 1, 0},
                 {0, 2, 0, 1, 1},
                 {0, 1, 1, 1, 1},
                 {0, 0, 1, 1, 2}});
}
inline std::vector<std::vector<quograph::Vertex>> cay17_cells() {
  return {{0}, {1, 4, 13, 16}, {3, 5, 12, 14}, {2, 8, 9, 15}, {6, 7, 10, 11}};
}
// The quotient polynomials as printed. The printed x^2 coefficient of p2,
// -10/26, is a misprint: p2(A) = J_2 forces -18/26 (see cay17_p2_exact).
inline std::vector<Polynomial> cay17_printed_polynomials() {
  return {poly(1, {1}), poly(1, {1, 0}), poly(26, {3, -10, -10, 75, -36}),
          poly(13, {-3, 10, 31, -75, -16}), poly(26, {5, -8, -56, 47, 44})};
}
inline Polynomial cay17_p2_exact() { return poly(26, {3, -10, -18, 75, -36}); }
inline std::vector<double> cay17_printed_eigenvalues() {
  return {4, 2.049, 0.344, -2.906, -0.488};
}

// ---- Y6.
inline IntegerMatrix y6_a1() {
  return matrix({{0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
                 {1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                 {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1},
                 {0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0},
                 {0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                 {0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0},
                 {0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0},
                 {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0},
                 {0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0},
                 {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0},
                 {0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1},
                 {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0}});
}
inline IntegerMatrix y6_a4() {
  IntegerMatrix m(12, 12);
  for (std::size_t i = 0; i < 12; ++i) m(i, (i + 6) % 12) = 1;
  return m;
}
inline std::vector<Polynomial> y6_distance_polynomials() {
  return {poly(1, {1}), poly(1, {1, 0}), poly(30, {2, 0, -25, 0, 83, 0, -60}),
          poly(20, {1, 0, -5, 0, -16, 0}), poly(20, {-1, 0, 15, 0, -54, 0, 20})};
}
inline std::vector<double> y6_eigenvalues() { return {3, 2, 1, 0, -1, -2, -3}; }
inline std::vector<std::size_t> y6_multiplicities() { return {1, 2, 1, 4, 1, 2, 1}; }

inline quograph::Graph graph_from_matrix(const IntegerMatrix& a) {
  std::vector<quograph::Edge> edges;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != 0) edges.emplace_back(i, j);
  return quograph::Graph(a.rows(), edges);
}

}  // namespace fixtures
