#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dissoc/tree.hpp"
#include "dissoc/treegen.hpp"

namespace dissoc {
namespace {

// Free trees of order 1..14 (OEIS A000055); orders <= 9 are confirmed below
// against Pruefer enumeration.
constexpr std::size_t kFreeTreeCounts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};

std::set<CanonicalCode> codes_of(const std::vector<Tree>& trees) {
  std::set<CanonicalCode> out;
  for (const auto& t : trees) out.insert(canonical_code(t));
  return out;
}

TEST(FreeTrees, Examples) {
  EXPECT_EQ(free_trees(1).size(), 1U);
  EXPECT_EQ(free_trees(1)[0], Tree::single_vertex());
  const auto four = free_trees(4);
  ASSERT_EQ(four.size(), 2U);
  EXPECT_EQ(codes_of(four), codes_of({path_tree(4), star_tree(3)}));
  EXPECT_EQ(free_trees(7).size(), 11U);
}

TEST(FreeTrees, RegressionCounts) {
  for (int n = 1; n <= 14; ++n) EXPECT_EQ(free_trees(n).size(), kFreeTreeCounts[n - 1]) << "n = " << n;
}

TEST(FreeTrees, NoDuplicateClasses) {
  for (int n = 1; n <= 14; ++n) {
    const auto trees = free_trees(n);
    EXPECT_EQ(codes_of(trees).size(), trees.size()) << "n = " << n;
  }
}

TEST(FreeTrees, NoDuplicatesUnderRandomRelabeling) {
  // Relabel each generated tree and deduplicate again: the class count must not change.
  std::mt19937 rng(10);
  for (int n = 10; n <= 14; ++n) {
    std::set<CanonicalCode> codes;
    std::size_t count = 0;
    for_each_free_tree(n, [&](const Tree& t) {
      std::vector<Vertex> p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      codes.insert(canonical_code(t.relabeled(p)));
      ++count;
    });
    EXPECT_EQ(codes.size(), count);
    EXPECT_EQ(count, kFreeTreeCounts[n - 1]);
  }
}

TEST(FreeTrees, LevelSequencesAreCanonical) {
  for (int n = 1; n <= 12; ++n) {
    FreeTreeGenerator gen(n);
    while (auto t = gen.next()) {
      const auto& seq = gen.current_levels();
      ASSERT_TRUE(seq.is_canonical());
      ASSERT_EQ(seq.to_tree(), *t);
    }
  }
}

TEST(FreeTrees, DeterministicOrder) {
  EXPECT_EQ(free_trees(9), free_trees(9));
}

TEST(FreeTrees, GenerationCap) {
  EXPECT_THROW(FreeTreeGenerator(19), std::invalid_argument);
  EXPECT_THROW(FreeTreeGenerator(0), std::invalid_argument);
  EXPECT_NO_THROW(FreeTreeGenerator(19, 19));
}

TEST(LevelSequence, Decoding) {
  EXPECT_EQ((LevelSequence{{0, 1, 2, 1}}.to_tree()), parse_edge_list("4\n0 1\n1 2\n0 3"));
  EXPECT_FALSE((LevelSequence{{0, 2}}).is_valid());
  EXPECT_FALSE((LevelSequence{{1}}).is_valid());
  EXPECT_TRUE((LevelSequence{{0, 1, 2, 1}}).is_canonical());
  EXPECT_FALSE((LevelSequence{{0, 1, 1, 2}}).is_canonical());
}

TEST(LabeledTreesPruefer, Counts) {
  const auto three = labeled_trees_pruefer(3);
  ASSERT_EQ(three.size(), 3U);
  for (const auto& t : three) EXPECT_TRUE(is_isomorphic(t, path_tree(3)));
  EXPECT_EQ(labeled_trees_pruefer(2).size(), 1U);

  const auto four = labeled_trees_pruefer(4);
  EXPECT_EQ(four.size(), 16U);
  EXPECT_EQ(codes_of(four).size(), 2U);

  const auto five = labeled_trees_pruefer(5);
  EXPECT_EQ(five.size(), 125U);
  EXPECT_EQ(codes_of(five).size(), 3U);
}

TEST(LabeledTreesPruefer, RejectsOutOfRange) {
  EXPECT_THROW(PrueferTreeGenerator(1), std::invalid_argument);
  EXPECT_THROW(PrueferTreeGenerator(10), std::invalid_argument);
}

TEST(LabeledTreesPruefer, AllLabeledTreesDistinct) {
  const auto six = labeled_trees_pruefer(6);
  std::set<std::vector<Edge>> seen;
  for (const auto& t : six) seen.insert(t.edges());
  EXPECT_EQ(seen.size(), 1296U);
}

TEST(FreeTrees, AgreeWithPrueferClassesUpToNine) {
  for (int n = 2; n <= 9; ++n) {
    std::set<CanonicalCode> pruefer;
    PrueferTreeGenerator gen(n);
    while (auto t = gen.next()) pruefer.insert(canonical_code(*t));
    EXPECT_EQ(pruefer, codes_of(free_trees(n))) << "n = " << n;
  }
}

}  // namespace
}  // namespace dissoc
