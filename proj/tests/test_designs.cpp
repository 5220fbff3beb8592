#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hypercolor/hypercolor.hpp"

using namespace hypercolor;

namespace {

// Count of blocks containing each k-set, by scanning all k-subsets.
bool every_kset_once(const SteinerSystem& f) {
  for (Rank r = 0; r < binom(f.n, f.k); ++r) {
    const Mask s = colex_unrank(r, f.n, f.k);
    const auto hits = std::count_if(f.blocks.begin(), f.blocks.end(), [&](Mask b) { return (b & s) == s; });
    if (hits != 1) return false;
  }
  return true;
}

std::set<Mask> relabel(const std::vector<Mask>& blocks, const std::vector<int>& perm) {
  std::set<Mask> out;
  for (Mask b : blocks) {
    Mask m = 0;
    for (int v = 0; v < static_cast<int>(perm.size()); ++v)
      if (b >> v & 1) m |= Mask{1} << perm[v];
    out.insert(m);
  }
  return out;
}

bool conflict_free(const SteinerSystem& f, const std::vector<std::size_t>& cls, int t) {
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j)
      if (std::popcount(f.blocks[cls[i]] & f.blocks[cls[j]]) >= t) return false;
  return true;
}

}  // namespace

TEST(AffinePlane, OrderTwo) {
  const auto f = affine_plane(2);
  EXPECT_EQ(f.n, 4);
  EXPECT_EQ(f.blocks.size(), 6u);
  EXPECT_EQ(tagged_classes(f).size(), 3u);
  EXPECT_TRUE(every_kset_once(f));
}

TEST(AffinePlane, OrderThree) {
  const auto f = affine_plane(3);
  EXPECT_EQ(f.blocks.size(), 12u);
  EXPECT_EQ(binom(9, 2), 12 * binom(3, 2));
  EXPECT_TRUE(every_kset_once(f));
  EXPECT_FALSE(steiner_violation(f).has_value());
}

TEST(AffinePlane, OrderFiveAndSeven) {
  const auto f5 = affine_plane(5);
  EXPECT_EQ(f5.blocks.size(), 30u);
  EXPECT_EQ(tagged_classes(f5).size(), 6u);
  EXPECT_TRUE(every_kset_once(f5));
  const auto f7 = affine_plane(7);
  EXPECT_EQ(f7.blocks.size(), 56u);
  EXPECT_TRUE(every_kset_once(f7));
}

TEST(AffinePlane, TaggedClassesAreParallel) {
  for (int q : {2, 3, 5, 7}) {
    const auto f = affine_plane(q);
    for (const auto& cls : tagged_classes(f)) {
      EXPECT_EQ(cls.size(), static_cast<std::size_t>(q));
      EXPECT_TRUE(conflict_free(f, cls, 1));
    }
  }
}

TEST(AffinePlane, RejectsUnsupportedOrders) {
  EXPECT_THROW(affine_plane(4), std::invalid_argument);
  EXPECT_THROW(affine_plane(1), std::invalid_argument);
  EXPECT_THROW(affine_plane(11), std::invalid_argument);
}

TEST(Builtin, FanoIsSteiner) {
  const auto f = builtin_design("fano");
  EXPECT_EQ(f.blocks.size(), 7u);
  EXPECT_TRUE(every_kset_once(f));
  EXPECT_FALSE(steiner_violation(f).has_value());
}

TEST(Builtin, S348ClosedUnderComplement) {
  const auto f = builtin_design("s348");
  EXPECT_EQ(f.blocks.size(), 14u);
  EXPECT_TRUE(every_kset_once(f));
  const std::set<Mask> blocks(f.blocks.begin(), f.blocks.end());
  for (Mask b : f.blocks) EXPECT_TRUE(blocks.contains(low_bits(8) & ~b));
}

TEST(Builtin, Ag23IsomorphicToAffineThree) {
  const auto ag = builtin_design("ag23");
  const auto plane = affine_plane(3);
  EXPECT_TRUE(every_kset_once(ag));
  const std::set<Mask> target(plane.blocks.begin(), plane.blocks.end());
  std::vector<int> perm(9);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    found = relabel(ag.blocks, perm) == target;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  EXPECT_TRUE(found);
}

TEST(Builtin, UnknownName) { EXPECT_THROW(builtin_design("s2616"), std::invalid_argument); }

TEST(Validation, DetectsBrokenDesigns) {
  auto f = builtin_design("fano");
  f.blocks.pop_back();
  EXPECT_TRUE(steiner_violation(f).has_value());
  EXPECT_THROW(validate_steiner(f), std::invalid_argument);

  auto g = builtin_design("fano");
  g.blocks.push_back(g.blocks.front());
  EXPECT_TRUE(steiner_violation(g).has_value());

  auto h = builtin_design("fano");
  h.blocks[0] |= Mask{1} << 6;
  EXPECT_TRUE(steiner_violation(h).has_value());
}

TEST(Partition, FanoNeedsSevenClasses) {
  const auto p = partition_blocks(builtin_design("fano"), 1);
  EXPECT_EQ(p.class_count(), 7u);
  EXPECT_EQ(p.lower_bound, 3u);
}

TEST(Partition, S348ComplementPaired) {
  const auto f = builtin_design("s348");
  const auto p = partition_blocks(f, 1, BlockOrder::complement_paired);
  ASSERT_EQ(p.class_count(), 7u);
  for (const auto& cls : p.classes) {
    ASSERT_EQ(cls.size(), 2u);
    EXPECT_EQ(f.blocks[cls[0]] | f.blocks[cls[1]], low_bits(8));
  }
}

TEST(Partition, AffineGivenOrderGivesParallelClasses) {
  for (int q : {2, 3, 5, 7}) {
    const auto f = affine_plane(q);
    const auto p = partition_blocks(f, 1, BlockOrder::given);
    EXPECT_EQ(p.class_count(), static_cast<std::size_t>(q + 1));
    for (const auto& cls : p.classes) EXPECT_TRUE(conflict_free(f, cls, 1));
  }
}

TEST(Partition, EveryBlockPlacedOnce) {
  const auto f = builtin_design("s348");
  for (int t = 1; t <= 3; ++t) {
    const auto p = partition_blocks(f, t);
    std::vector<int> seen(f.blocks.size(), 0);
    for (const auto& cls : p.classes) {
      EXPECT_TRUE(conflict_free(f, cls, t));
      for (auto b : cls) ++seen[b];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
    EXPECT_GE(p.class_count(), p.lower_bound);
  }
  EXPECT_THROW(partition_blocks(f, 0), std::invalid_argument);
}

TEST(Partition, BlockOrderNames) {
  EXPECT_EQ(parse_block_order("given"), BlockOrder::given);
  EXPECT_EQ(parse_block_order("complement-paired"), BlockOrder::complement_paired);
  EXPECT_FALSE(parse_block_order("random").has_value());
}

TEST(Degree, MatchesBlocksThroughTset) {
  std::vector<SteinerSystem> designs{builtin_design("fano"), builtin_design("s348"), builtin_design("ag23")};
  for (int q : {2, 3, 5, 7}) designs.push_back(affine_plane(q));
  for (const auto& f : designs)
    for (int t = 1; t <= f.k; ++t) EXPECT_EQ(tset_degree(f, t), max_blocks_through_tset(f, t)) << f.n << " t=" << t;
}
