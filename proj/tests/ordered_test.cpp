#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "baselines.hpp"
#include "oracle.hpp"
#include "sharpbound/error.hpp"
#include "sharpbound/ordered.hpp"

using namespace sharpbound;

TEST(Partition, Characteristics) {
  EXPECT_EQ(partition_characteristics(PartitionInstance({1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 4})),
            (PartitionCharacteristics{11, 4, 1, 6, 5}));
  EXPECT_EQ(partition_characteristics(PartitionInstance({7})), (PartitionCharacteristics{1, 1, 1, 1, 0}));
  EXPECT_EQ(partition_characteristics(PartitionInstance({0, 0, 2, 0, 3, 3})),
            (PartitionCharacteristics{6, 3, 1, 3, 2}));
}

TEST(Partition, EmptyIsRejected) { EXPECT_THROW(PartitionInstance({}), PreconditionError); }

TEST(Partition, OccurrenceProfileMatchesValues) {
  EXPECT_EQ(occurrence_characteristics(std::vector<Count>{6, 2, 2, 1}), (PartitionCharacteristics{11, 4, 1, 6, 5}));
}

TEST(Partition, InvariantUnderPermutationAndRenaming) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Count> values(1 + rng() % 12);
    for (auto& x : values) x = static_cast<Count>(rng() % 5);
    const auto before = partition_characteristics(PartitionInstance(values));
    std::shuffle(values.begin(), values.end(), rng);
    EXPECT_EQ(partition_characteristics(PartitionInstance(values)), before);
    for (auto& x : values) x = 100 - 3 * x;
    EXPECT_EQ(partition_characteristics(PartitionInstance(values)), before);
  }
}

TEST(Tree, Characteristics) {
  EXPECT_EQ(tree_characteristics(RootedTree({0, 0, 2, 0, 3, 3})), (RootedTreeCharacteristics{7, 4, 1, 3}));
  EXPECT_EQ(tree_characteristics(RootedTree()), (RootedTreeCharacteristics{1, 1, 0, 0}));
  EXPECT_EQ(tree_characteristics(RootedTree({0, 0, 1, 1, 2, 2})), (RootedTreeCharacteristics{7, 4, 2, 2}));
}

TEST(Tree, RejectsNonTrees) {
  try {
    RootedTree({2, 1});
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "not a tree");
  }
  EXPECT_THROW(RootedTree({0, 5}), PreconditionError);
  EXPECT_THROW(RootedTree({-1}), PreconditionError);
  EXPECT_THROW(RootedTree({1}), PreconditionError);
  EXPECT_FALSE(is_rooted_tree(std::vector<Vertex>{2, 3, 1}));
  EXPECT_TRUE(is_rooted_tree(std::vector<Vertex>{0, 1, 2}));
}

TEST(Tree, FatherAccess) {
  const RootedTree t({0, 0, 2});
  EXPECT_EQ(t.node_count(), 4);
  EXPECT_EQ(t.father(3), 2);
}

TEST(Mapping, Examples) {
  EXPECT_EQ(tree_to_partition(RootedTree({0, 0, 2, 0, 3, 3})), PartitionInstance({0, 0, 2, 0, 3, 3}));
  EXPECT_EQ(tree_to_partition(RootedTree({0})), PartitionInstance({0}));
  const RootedTree star({0, 0, 0});
  const auto p = partition_characteristics(tree_to_partition(star));
  EXPECT_EQ(p.nval, 1);
  EXPECT_EQ(p.nval, star.node_count() - tree_characteristics(star).leaves);
}

TEST(Mapping, SingleVertexIsRejected) {
  try {
    tree_to_partition(RootedTree());
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "mapping undefined for single vertex");
  }
}

// Every labeled tree up to seven vertices, generated independently of the
// library's enumerator.
TEST(Mapping, IdentitiesHoldExhaustively) {
  for (int n = 1; n <= 7; ++n) {
    const auto trees = oracle::trees_by_pruefer(n);
    EXPECT_EQ(trees.size(), baselines::kTreeCounts[n - 1]);
    for (const auto& fathers : trees) {
      const RootedTree t(std::vector<Vertex>(fathers.begin(), fathers.end()));
      const auto tc = tree_characteristics(t);
      const auto o = oracle::tree_characteristics(fathers);
      ASSERT_EQ(tc, (RootedTreeCharacteristics{o.n, o.leaves, o.d_min, o.d_max}));
      if (n == 1) continue;
      const auto pc = partition_characteristics(tree_to_partition(t));
      EXPECT_EQ(pc.nval, tc.n - tc.leaves);
      EXPECT_EQ(pc.n_p, tc.n - 1);
      EXPECT_EQ(pc.m_min, tc.d_min);
      EXPECT_EQ(pc.m_max, tc.d_max);
    }
  }
}

TEST(Tree, RenamingPreservesCharacteristics) {
  std::mt19937 rng(5);
  for (const auto& fathers : oracle::trees_by_pruefer(6)) {
    // Swap the labels of two non-root vertices and re-express the tree.
    const int n = 6;
    std::vector<int> full(n, 0);
    for (int j = 1; j < n; ++j) full[j] = fathers[j - 1];
    const int a = 1 + static_cast<int>(rng() % (n - 1));
    const int b = 1 + static_cast<int>(rng() % (n - 1));
    auto swap_label = [&](int x) { return x == a ? b : x == b ? a : x; };
    std::vector<Vertex> renamed(n - 1);
    for (int j = 1; j < n; ++j) renamed[swap_label(j) - 1] = swap_label(full[j]);
    EXPECT_EQ(tree_characteristics(RootedTree(renamed)),
              tree_characteristics(RootedTree(std::vector<Vertex>(fathers.begin(), fathers.end()))));
  }
}
