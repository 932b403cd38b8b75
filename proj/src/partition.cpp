#include "quograph/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace quograph {

namespace {
constexpr const char* kModule = "partitions";
}

void require_connected(const Graph& g, const char* module) {
  if (g.order() == 0) throw AnalysisError(module, "graph has no vertices");
  if (!g.connected()) throw AnalysisError(module, "graph is disconnected");
}

std::vector<std::vector<Edge>> PairPartition::classes() const {
  std::vector<std::vector<Edge>> out(size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) out[(*this)(u, v)].emplace_back(u, v);
  return out;
}

std::vector<std::size_t> PairPartition::class_sizes() const {
  std::vector<std::size_t> sizes(size(), 0);
  for (std::size_t c : class_of) ++sizes[c];
  return sizes;
}

IntegerMatrix PairPartition::class_matrix(std::size_t i) const {
  IntegerMatrix m(n, n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if ((*this)(u, v) == i) m(u, v) = 1;
  return m;
}

std::vector<IntegerMatrix> PairPartition::class_matrices() const {
  std::vector<IntegerMatrix> out(size(), IntegerMatrix(n, n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) out[(*this)(u, v)](u, v) = 1;
  return out;
}

std::size_t PairPartition::diagonal_class_count() const {
  std::vector<bool> seen(size(), false);
  for (Vertex u = 0; u < n; ++u) seen[(*this)(u, u)] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

bool same_set_partition(const PairPartition& a, const PairPartition& b) {
  if (a.n != b.n || a.size() != b.size()) return false;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> a_to_b(a.size(), kUnset), b_to_a(b.size(), kUnset);
  for (std::size_t k = 0; k < a.class_of.size(); ++k) {
    const std::size_t x = a.class_of[k], y = b.class_of[k];
    if (a_to_b[x] == kUnset && b_to_a[y] == kUnset) {
      a_to_b[x] = y;
      b_to_a[y] = x;
    } else if (a_to_b[x] != y || b_to_a[y] != x) {
      return false;
    }
  }
  return true;
}

std::vector<Integer> LocalPartition::characteristic_vector(std::size_t i,
                                                           std::size_t n) const {
  std::vector<Integer> chi(n, Integer(0));
  for (Vertex v : cells.at(i)) chi[v] = 1;
  return chi;
}

WalkTable walk_vectors(PowerLadder& ladder, std::size_t length) {
  const std::size_t n = ladder.order();
  WalkTable t;
  t.n = n;
  t.vectors.assign(n * n, WalkVector(length));
  for (std::size_t l = 0; l < length; ++l) {
    auto flat = ladder.power(l).flat();
    for (std::size_t k = 0; k < n * n; ++k) t.vectors[k][l] = flat[k];
  }
  return t;
}

WalkTable walk_vectors(const Graph& g, std::size_t d) {
  require_connected(g, kModule);
  PowerLadder ladder(g);
  return walk_vectors(ladder, d + 1);
}

PairPartition global_partition(const Graph& g, const PartitionOptions& opts) {
  require_connected(g, kModule);
  PowerLadder ladder(g);
  const std::size_t d = algebra_dimension(ladder) - 1;
  return global_partition(g, ladder, d, opts);
}

PairPartition global_partition(const Graph& g, PowerLadder& ladder, std::size_t d,
                               const PartitionOptions& opts) {
  require_connected(g, kModule);
  const std::size_t n = g.order();
  const WalkTable table = walk_vectors(ladder, d + 1);

  // Exact grouping; std::map compares the big-integer vectors entry by entry.
  std::map<WalkVector, std::size_t> ids;
  std::vector<std::size_t> raw(n * n);
  for (std::size_t k = 0; k < n * n; ++k)
    raw[k] = ids.try_emplace(table.vectors[k], ids.size()).first->second;

  std::vector<const WalkVector*> key(ids.size());
  for (const auto& [vec, id] : ids) key[id] = &vec;
  std::vector<std::uint32_t> dist(ids.size());
  std::vector<bool> dist_set(ids.size(), false);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t id = raw[u * n + v];
      const std::uint32_t duv = g.dist(u, v).value();
      if (!dist_set[id]) {
        dist[id] = duv;
        dist_set[id] = true;
      } else if (dist[id] != duv) {
        throw ContractViolation(kModule, "walk class mixes distances " +
                                             std::to_string(dist[id]) + " and " +
                                             std::to_string(duv));
      }
    }
  }

  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return *key[b] < *key[a];
  });
  std::vector<std::size_t> rank_of(ids.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank_of[order[pos]] = pos;

  PairPartition p;
  p.n = n;
  p.class_of.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) p.class_of[k] = rank_of[raw[k]];
  for (std::size_t id : order) {
    p.class_distance.push_back(dist[id]);
    p.class_walk_vector.push_back(*key[id]);
  }

  if (opts.extended_check) {
    const WalkTable longer = walk_vectors(ladder, 2 * d + 1);
    std::map<WalkVector, std::size_t> finer;
    for (const auto& v : longer.vectors) finer.try_emplace(v, finer.size());
    if (finer.size() != p.size())
      throw ContractViolation(kModule, "walk vectors of length 2d+1 refine the partition (" +
                                           std::to_string(finer.size()) + " vs " +
                                           std::to_string(p.size()) + " classes)");
  }
  return p;
}

LocalPartition local_partition(const PairPartition& p, Vertex u) {
  if (u >= p.n) throw InputError(kModule, "vertex " + std::to_string(u) + " out of range");
  std::vector<std::vector<Vertex>> by_class(p.size());
  for (Vertex v = 0; v < p.n; ++v) by_class[p(u, v)].push_back(v);
  LocalPartition lp;
  lp.center = u;
  for (std::size_t i = 0; i < by_class.size(); ++i) {
    if (by_class[i].empty()) continue;
    lp.cells.push_back(std::move(by_class[i]));
    lp.cell_class.push_back(i);
  }
  return lp;
}

bool is_distance_faithful(const LocalPartition& lp, const DistanceData& dd) {
  for (const auto& cell : lp.cells) {
    if (cell.empty()) continue;
    const Distance first = dd(lp.center, cell.front());
    for (Vertex v : cell)
      if (dd(lp.center, v) != first) return false;
  }
  return true;
}

LocalPartition distance_partition(const Graph& g, Vertex u) {
  const auto& dd = g.distance_data();
  const std::uint32_t ecc = dd.eccentricity.at(u).value();
  LocalPartition lp;
  lp.center = u;
  lp.cells.resize(ecc + 1);
  for (Vertex v = 0; v < g.order(); ++v) lp.cells[dd(u, v).value()].push_back(v);
  lp.cell_class.resize(ecc + 1);
  std::iota(lp.cell_class.begin(), lp.cell_class.end(), 0);
  return lp;
}

std::optional<QuotientMatrixB> check_regular(const Graph& g, const LocalPartition& lp) {
  const std::size_t n = g.order();
  const std::size_t m = lp.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cell_of(n, kNone);
  for (std::size_t i = 0; i < m; ++i)
    for (Vertex v : lp.cells[i]) {
      if (v >= n || cell_of[v] != kNone)
        throw InputError(kModule, "cells do not partition the vertex set");
      cell_of[v] = i;
    }
  if (std::find(cell_of.begin(), cell_of.end(), kNone) != cell_of.end())
    throw InputError(kModule, "cells do not cover the vertex set");

  QuotientMatrixB out{IntegerMatrix(m, m)};
  std::vector<long> counts(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.cells[i].empty()) continue;
    for (std::size_t k = 0; k < lp.cells[i].size(); ++k) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex w : g.neighbors(lp.cells[i][k])) ++counts[cell_of[w]];
      for (std::size_t j = 0; j < m; ++j) {
        if (k == 0)
          out.b(i, j) = counts[j];
        else if (out.b(i, j) != counts[j])
          return std::nullopt;
      }
    }
  }
  return out;
}

}  // namespace quograph
