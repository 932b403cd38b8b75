#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quograph/algebra.hpp"
#include "quograph/partition.hpp"

using namespace quograph;

namespace {

// Independent grouping of V x V by walk vectors from neighbour-list DP.
std::vector<std::set<Edge>> oracle_classes(const Graph& g, std::size_t d) {
  std::map<std::vector<Integer>, std::set<Edge>> groups;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto w = oracle::walks_from(g, u, d);
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<Integer> key;
      for (std::size_t l = 0; l <= d; ++l) key.push_back(w[l][v]);
      groups[key].insert({u, v});
    }
  }
  std::vector<std::set<Edge>> out;
  for (auto& [k, s] : groups) out.push_back(std::move(s));
  return out;
}

std::set<std::set<Edge>> as_set(const PairPartition& p) {
  std::set<std::set<Edge>> out;
  for (const auto& c : p.classes()) out.insert(std::set<Edge>(c.begin(), c.end()));
  return out;
}

std::size_t d_of(const Graph& g) { return algebra_dimension(g) - 1; }

}  // namespace

TEST(WalkVectors, DiagonalStartsWithDegree) {
  for (const Graph& g : {petersen_graph(), path_graph(4), star_graph(3)}) {
    const WalkTable t = walk_vectors(g, 3);
    for (Vertex u = 0; u < g.order(); ++u) {
      EXPECT_EQ(t(u, u)[0], 1);
      EXPECT_EQ(t(u, u)[1], 0);
      EXPECT_EQ(t(u, u)[2], g.degree(u));
    }
  }
}

TEST(WalkVectors, CirculantColumns) {
  const WalkTable t = walk_vectors(circulant(17, {1, 4}), 4);
  EXPECT_EQ(t(0, 0), (WalkVector{1, 0, 4, 0, 36}));
  for (Vertex v : {3, 5, 12, 14}) EXPECT_EQ(t(0, v), (WalkVector{0, 0, 2, 1, 24}));
}

TEST(WalkVectors, MatchDynamicProgrammingOracle) {
  for (const Graph& g : {y6_graph(), petersen_graph(), path_graph(6)}) {
    const std::size_t len = 7;
    const WalkTable t = walk_vectors(g, len);
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto w = oracle::walks_from(g, u, len);
      for (Vertex v = 0; v < g.order(); ++v)
        for (std::size_t l = 0; l <= len; ++l) ASSERT_EQ(t(u, v)[l], w[l][v]);
    }
  }
}

TEST(WalkVectors, DisconnectedIsAnalysisError) {
  EXPECT_THROW(walk_vectors(build_graph(3, {}), 2), AnalysisError);
}

TEST(GlobalPartition, CompleteGraphHasTwoClasses) {
  for (std::size_t n : {2, 3, 6}) {
    const PairPartition p = global_partition(complete_graph(n));
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p.class_matrix(0), IntegerMatrix::identity(n));
    EXPECT_EQ(p.class_matrix(1), complete_graph(n).adjacency_matrix());
  }
}

TEST(GlobalPartition, CirculantHasFiveClassesInCellOrder) {
  const Graph g = circulant(17, {1, 4});
  const PairPartition p = global_partition(g);
  ASSERT_EQ(p.size(), 5u);
  const auto cells = fixtures::cay17_cells();
  for (std::size_t i = 0; i < 5; ++i)
    for (Vertex v : cells[i]) EXPECT_EQ(p(0, v), i) << "vertex " << v;
  EXPECT_EQ(p.class_distance, (std::vector<std::uint32_t>{0, 1, 2, 2, 3}));
}

TEST(GlobalPartition, Y6HasEightClasses) {
  const Graph g = y6_graph();
  const PairPartition p = global_partition(g);
  EXPECT_EQ(p.size(), 8u);
  EXPECT_EQ(as_set(p).size(), oracle_classes(g, 6).size());
}

TEST(GlobalPartition, AgreesWithOracleGrouping) {
  for (const Graph& g : {y6_graph(), petersen_graph(), path_graph(5), star_graph(4),
                         circulant(17, {1, 4}), prism_graph(5)}) {
    const auto expected = oracle_classes(g, d_of(g));
    const std::set<std::set<Edge>> want(expected.begin(), expected.end());
    EXPECT_EQ(as_set(global_partition(g)), want);
  }
}

TEST(GlobalPartition, ClassInvariants) {
  for (const Graph& g : {y6_graph(), petersen_graph(), path_graph(5), star_graph(3)}) {
    const PairPartition p = global_partition(g);
    IntegerMatrix sum(g.order(), g.order());
    for (std::size_t i = 0; i < p.size(); ++i) {
      const IntegerMatrix m = p.class_matrix(i);
      EXPECT_TRUE(m.is_symmetric());
      sum += m;
      // First nonzero walk count sits at the class distance.
      const WalkVector& w = p.class_walk_vector[i];
      std::size_t first = 0;
      while (w[first] == 0) ++first;
      EXPECT_EQ(first, p.class_distance[i]);
    }
    EXPECT_EQ(sum, IntegerMatrix::ones(g.order(), g.order()));
  }
}

TEST(GlobalPartition, NonWalkRegularListsDiagonalClassesFirst) {
  const PairPartition p = global_partition(path_graph(3));
  EXPECT_EQ(p.diagonal_class_count(), 2u);
  EXPECT_EQ(p.class_distance[0], 0u);
  EXPECT_EQ(p.class_distance[1], 0u);
  EXPECT_NE(p.class_matrix(0), IntegerMatrix::identity(3));
}

TEST(GlobalPartition, ExtendedCheckFindsNoRefinement) {
  for (const Graph& g : {y6_graph(), circulant(17, {1, 4}), star_graph(3)}) {
    const PairPartition a = global_partition(g);
    const PairPartition b = global_partition(g, {.extended_check = true});
    EXPECT_TRUE(same_set_partition(a, b));
  }
}

TEST(GlobalPartition, DisconnectedIsAnalysisError) {
  EXPECT_THROW(global_partition(build_graph(4, {})), AnalysisError);
}

TEST(LocalPartition, CirculantCells) {
  const LocalPartition lp = local_partition(global_partition(circulant(17, {1, 4})), 0);
  EXPECT_EQ(lp.cells, fixtures::cay17_cells());
  EXPECT_EQ(lp.characteristic_vector(0, 17)[0], 1);
}

TEST(LocalPartition, TriangleAndPentagon) {
  EXPECT_EQ(local_partition(global_partition(complete_graph(3)), 0).cells,
            (std::vector<std::vector<Vertex>>{{0}, {1, 2}}));
  EXPECT_EQ(local_partition(global_partition(cycle_graph(5)), 0).cells,
            (std::vector<std::vector<Vertex>>{{0}, {1, 4}, {2, 3}}));
}

TEST(LocalPartition, EmptyCellsAreDroppedWithIndexMap) {
  // In the path 0-1-2 the centre's row never meets the endpoint classes.
  const PairPartition p = global_partition(path_graph(3));
  const LocalPartition lp = local_partition(p, 1);
  EXPECT_LT(lp.size(), p.size());
  for (std::size_t i = 0; i < lp.size(); ++i)
    for (Vertex v : lp.cells[i]) EXPECT_EQ(p(1, v), lp.cell_class[i]);
}

TEST(DistanceFaithful, WalkCellsAreDistanceFaithful) {
  for (const Graph& g : {y6_graph(), circulant(17, {1, 4}), path_graph(5)}) {
    const PairPartition p = global_partition(g);
    for (Vertex u = 0; u < g.order(); ++u)
      EXPECT_TRUE(is_distance_faithful(local_partition(p, u), g.distance_data()));
  }
}

TEST(DistanceFaithful, MixedCellIsRejected) {
  const Graph g = cycle_graph(5);
  LocalPartition lp;
  lp.center = 0;
  lp.cells = {{0}, {1, 2}, {3, 4}};
  EXPECT_FALSE(is_distance_faithful(lp, g.distance_data()));
}

TEST(DistanceFaithful, DistancePartitionIsFaithful) {
  for (const Graph& g : {y6_graph(), petersen_graph(), star_graph(4)})
    for (Vertex u = 0; u < g.order(); ++u)
      EXPECT_TRUE(is_distance_faithful(distance_partition(g, u), g.distance_data()));
}

TEST(CheckRegular, CirculantGivesPrintedTranspose) {
  const Graph g = circulant(17, {1, 4});
  const auto b = check_regular(g, local_partition(global_partition(g), 0));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->b.transpose(), fixtures::cay17_b_transpose());
}

TEST(CheckRegular, TriangleAndPentagon) {
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(check_regular(k3, local_partition(global_partition(k3), 0))->b,
            fixtures::matrix({{0, 2}, {1, 1}}));
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(check_regular(c5, local_partition(global_partition(c5), 0))->b,
            fixtures::matrix({{0, 2, 0}, {1, 0, 1}, {0, 1, 1}}));
}

TEST(CheckRegular, Y6CellsAreEquitableEverywhere) {
  const Graph g = y6_graph();
  const PairPartition p = global_partition(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    const LocalPartition lp = local_partition(p, u);
    const auto b = check_regular(g, lp);
    ASSERT_TRUE(b) << "vertex " << u;
    // Direct neighbour counts for every vertex of every cell.
    for (std::size_t i = 0; i < lp.size(); ++i)
      for (Vertex x : lp.cells[i])
        for (std::size_t j = 0; j < lp.size(); ++j) {
          long count = 0;
          for (Vertex y : lp.cells[j]) count += g.adjacent(x, y);
          ASSERT_EQ(b->b(i, j), count);
        }
    for (std::size_t i = 0; i < lp.size(); ++i) {
      Integer row = 0;
      for (std::size_t j = 0; j < lp.size(); ++j) row += b->b(i, j);
      EXPECT_EQ(row, 3);
    }
  }
}

TEST(CheckRegular, NonEquitableIsNullopt) {
  const Graph g = path_graph(4);
  LocalPartition lp;
  lp.center = 0;
  lp.cells = {{0}, {1, 2, 3}};
  EXPECT_FALSE(check_regular(g, lp));
}

TEST(CheckRegular, CellsMustCoverVertices) {
  LocalPartition lp;
  lp.cells = {{0}, {1}};
  EXPECT_THROW(check_regular(path_graph(3), lp), InputError);
}

TEST(WalkPartition, RefineAndMergeRecoversCoarsestCells) {
  // Split the neighbour cell of the circulant's local partition and merge it
  // back. The split stays distance-faithful but is no longer equitable
  // (vertex 2 sees 1 but not 4 or 13); the union restores the original B.
  const Graph g = circulant(17, {1, 4});
  const LocalPartition lp = local_partition(global_partition(g), 0);
  LocalPartition fine = lp;
  fine.cells = {{0}, {1, 16}, {4, 13}, {3, 5, 12, 14}, {2, 8, 9, 15}, {6, 7, 10, 11}};
  EXPECT_TRUE(is_distance_faithful(fine, g.distance_data()));
  EXPECT_FALSE(check_regular(g, fine));
  LocalPartition merged = fine;
  merged.cells = {{0}, {1, 4, 13, 16}, {3, 5, 12, 14}, {2, 8, 9, 15}, {6, 7, 10, 11}};
  EXPECT_EQ(check_regular(g, merged)->b, check_regular(g, lp)->b);
}
