#pragma once

// Regularity classes around quotient-polynomial graphs, and the association
// scheme generated by one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quograph/algebra.hpp"
#include "quograph/graph.hpp"
#include "quograph/partition.hpp"
#include "quograph/quotient.hpp"

namespace quograph {

struct ClassificationFlags {
  bool walk_regular = false;
  std::vector<bool> h_punctual;  // index h = 0..D
  bool distance_regular = false;
  bool distance_polynomial = false;
  bool quotient_polynomial = false;
  std::optional<bool> orbit_polynomial;  // only when the orbit pass ran
  std::optional<std::vector<Polynomial>> distance_polys;

  friend bool operator==(const ClassificationFlags&, const ClassificationFlags&) = default;
};

// Symmetric association scheme A_0 = I, A_1, ..., A_d with
// A_i A_j = sum_k p[k][i][j] A_k.
struct AssociationScheme {
  std::vector<IntegerMatrix> classes;
  std::vector<std::vector<std::vector<std::int64_t>>> p;  // p[k][i][j]

  std::size_t class_count() const noexcept { return classes.empty() ? 0 : classes.size() - 1; }
  std::int64_t intersection_number(std::size_t k, std::size_t i, std::size_t j) const {
    return p.at(k).at(i).at(j);
  }
  friend bool operator==(const AssociationScheme&, const AssociationScheme&) = default;
};

bool is_walk_regular(const PairPartition& p);

// Some single class matrix equals the distance-h matrix A_h.
bool is_h_punctually_walk_regular(const PairPartition& p, const Graph& g, std::size_t h);

// QP with D = r, cross-checked against Delsarte's criterion
// (A_i = p_i(A) with deg p_i = i for i = 0..d). Disagreement throws.
bool is_distance_regular(const Graph& g, const QuotientReport& rep);
bool is_distance_regular(const Graph& g, PowerLadder& ladder, const QuotientReport& rep);

// Polynomials for A_0..A_D in the power basis A^0..A^d, or nullopt.
std::optional<std::vector<Polynomial>> is_distance_polynomial(const Graph& g);
std::optional<std::vector<Polynomial>> is_distance_polynomial(const Graph& g, PowerLadder& ladder,
                                                              std::size_t d);

// Distance polynomials assembled from quotient polynomials: the i-th is the
// sum of q_j over classes J_j meeting distance i. Verified exactly.
std::vector<Polynomial> qp_implies_dp(const QuotientReport& rep, const Graph& g);

struct SchemeOptions {
  bool solve_witness = false;  // also recover p^k_ij by an exact solve
};

AssociationScheme build_scheme(const QuotientReport& rep, const PairPartition& p,
                               const SchemeOptions& opts = {});

// Checks all scheme axioms exactly; returns a description of the first
// failure, or nullopt.
std::optional<std::string> scheme_axiom_failure(const AssociationScheme& s);

// vec(A^0)..vec(A^d) and vec(A_0)..vec(A_d) span the same space over Q.
bool generates_scheme_check(const AssociationScheme& s, const Graph& g);

ClassificationFlags classify(const Graph& g, PowerLadder& ladder, const QuotientReport& rep);

}  // namespace quograph
