#pragma once

// Brute-force automorphism groups of tiny graphs and the orbit partition
// of V x V they induce.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "quograph/graph.hpp"
#include "quograph/partition.hpp"

namespace quograph {

inline constexpr std::size_t kDefaultAutomorphismCap = 10;

// Every automorphism of a graph, stored as images sigma(0..n-1) back to back.
class AutomorphismList {
 public:
  AutomorphismList() = default;
  explicit AutomorphismList(std::size_t n) : n_(n) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ == 0 ? 0 : images_.size() / n_; }
  std::span<const std::uint16_t> operator[](std::size_t k) const {
    return {images_.data() + k * n_, n_};
  }
  void push_back(std::span<const std::uint16_t> perm) {
    images_.insert(images_.end(), perm.begin(), perm.end());
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> images_;
};

// Backtracking over vertex images, pruned by (degree, sorted distance
// profile) and by distance preservation. SizeError when n exceeds `cap`.
AutomorphismList automorphisms(const Graph& g, std::size_t cap = kDefaultAutomorphismCap);

// Orbits of Aut acting on ordered pairs. Orbit classes are ordered by first
// appearance in row-major pair order, so J_0 contains (0,0).
struct OrbitPartition {
  std::size_t n = 0;
  std::vector<std::size_t> orbit_of;  // row-major n x n
  std::size_t count = 0;

  std::size_t operator()(Vertex u, Vertex v) const { return orbit_of[u * n + v]; }
  std::vector<IntegerMatrix> orbit_matrices() const;
};

OrbitPartition orbit_partition(const AutomorphismList& auts, std::size_t n);

// Every orbit matrix lies in span{A^0..A^d}.
bool is_orbit_polynomial(const Graph& g, const OrbitPartition& op);

// Every orbit sits inside one class of `p`.
bool refines(const OrbitPartition& op, const PairPartition& p);

}  // namespace quograph
