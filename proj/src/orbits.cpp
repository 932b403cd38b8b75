#include "quograph/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "quograph/algebra.hpp"
#include "quograph/quotient.hpp"

namespace quograph {

namespace {

constexpr const char* kModule = "automorphism-orbits";

struct Search {
  const Graph& g;
  std::size_t n;
  std::vector<std::vector<Distance>> keys;
  std::vector<std::uint16_t> image;
  std::vector<bool> used;
  AutomorphismList out;

  void extend(Vertex v) {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || keys[w] != keys[v]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = g.dist(u, v) == g.dist(image[u], w);
      if (!ok) continue;
      image[v] = static_cast<std::uint16_t>(w);
      used[w] = true;
      extend(v + 1);
      used[w] = false;
    }
  }
};

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

AutomorphismList automorphisms(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw SizeError(kModule, "automorphism search is capped at " + std::to_string(cap) +
                                 " vertices (graph has " + std::to_string(n) +
                                 "); use a canonical-labelling tool such as nauty");
  if (n > 65535) throw SizeError(kModule, "vertex labels exceed 16 bits");
  Search s{g, n, {}, std::vector<std::uint16_t>(n), std::vector<bool>(n, false),
           AutomorphismList(n)};
  // Key: degree first, then the sorted distance profile.
  s.keys.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& k = s.keys[v];
    k.push_back(Distance(static_cast<std::uint32_t>(g.degree(v))));
    for (Vertex u = 0; u < n; ++u) k.push_back(g.dist(v, u));
    std::sort(k.begin() + 1, k.end());
  }
  s.extend(0);
  return std::move(s.out);
}

std::vector<IntegerMatrix> OrbitPartition::orbit_matrices() const {
  std::vector<IntegerMatrix> out(count, IntegerMatrix(n, n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) out[(*this)(u, v)](u, v) = 1;
  return out;
}

OrbitPartition orbit_partition(const AutomorphismList& auts, std::size_t n) {
  if (auts.size() > 0 && auts.order() != n)
    throw InputError(kModule, "automorphisms act on a different vertex count");
  std::vector<std::size_t> parent(n * n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t k = 0; k < auts.size(); ++k) {
    const auto sigma = auts[k];
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t a = find(parent, u * n + v);
        const std::size_t b = find(parent, std::size_t{sigma[u]} * n + sigma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  }
  OrbitPartition op;
  op.n = n;
  op.orbit_of.resize(n * n);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n * n, kUnset);
  for (std::size_t k = 0; k < n * n; ++k) {
    const std::size_t root = find(parent, k);
    if (label[root] == kUnset) label[root] = op.count++;
    op.orbit_of[k] = label[root];
  }
  return op;
}

bool is_orbit_polynomial(const Graph& g, const OrbitPartition& op) {
  require_connected(g, kModule);
  if (op.n != g.order()) throw InputError(kModule, "orbit partition has the wrong size");
  PowerLadder ladder(g);
  const std::size_t d = algebra_dimension(ladder) - 1;
  const auto mats = op.orbit_matrices();
  return algebra_coordinates(ladder, d, mats).has_value();
}

bool refines(const OrbitPartition& op, const PairPartition& p) {
  if (op.n != p.n) return false;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of_orbit(op.count, kUnset);
  for (std::size_t k = 0; k < op.orbit_of.size(); ++k) {
    auto& c = class_of_orbit[op.orbit_of[k]];
    if (c == kUnset)
      c = p.class_of[k];
    else if (c != p.class_of[k])
      return false;
  }
  return true;
}

}  // namespace quograph
