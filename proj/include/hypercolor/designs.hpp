#pragma once

// Small Steiner systems and greedy partitioning of their blocks into classes
// whose blocks pairwise share fewer than t points.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypercolor/colex.hpp"

namespace hypercolor {

// (n, h, k)-Steiner system: every k-subset of {1..n} lies in exactly one block.
struct SteinerSystem {
  int n = 0;
  int h = 0;
  int k = 0;
  std::vector<Mask> blocks;
  std::vector<int> parallel_class;  // per block, or empty when untagged
};

// Returns a description of the first violated invariant, or nullopt.
inline std::optional<std::string> steiner_violation(const SteinerSystem& f) {
  if (f.n < 1 || f.n > kMaskVertices) return "n must be in [1, 64]";
  if (!(f.n > f.h && f.h >= f.k && f.k >= 1)) return "need n > h >= k >= 1";
  if (!f.parallel_class.empty() && f.parallel_class.size() != f.blocks.size())
    return "parallel class tags do not match the block count";
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    if (std::popcount(f.blocks[i]) != f.h) return "block " + std::to_string(i + 1) + " does not have h points";
    if ((f.blocks[i] & ~low_bits(f.n)) != 0) return "block " + std::to_string(i + 1) + " has a point outside {1..n}";
  }
  const auto expected = binom(f.n, f.k) / binom(f.h, f.k);
  if (binom(f.n, f.k) % binom(f.h, f.k) != 0 || f.blocks.size() != expected)
    return "block count " + std::to_string(f.blocks.size()) + " differs from C(n,k)/C(h,k)";
  std::vector<int> covered(checked_binom(f.n, f.k), 0);
  for (Mask b : f.blocks) {
    std::vector<int> pts;
    for (Mask m = b; m != 0; m &= m - 1) pts.push_back(std::countr_zero(m));
    for_each_subset_rank(pts, f.k, [&](Rank r) { ++covered[r]; });
  }
  for (std::size_t r = 0; r < covered.size(); ++r)
    if (covered[r] != 1) {
      std::string set;
      for (int v : colex_unrank_vertices(r, f.n, f.k)) set += (set.empty() ? "" : " ") + std::to_string(v + 1);
      return "k-set {" + set + "} lies in " + std::to_string(covered[r]) + " blocks";
    }
  return std::nullopt;
}

inline void validate_steiner(const SteinerSystem& f) {
  if (auto why = steiner_violation(f)) throw std::invalid_argument("not a Steiner system: " + *why);
}

inline bool is_prime(int q) noexcept {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// AG(2,q) for prime q: point (x,y) is vertex x*q + y + 1. Classes 0..q-1 hold
// the lines y = m x + b of slope m; class q holds the vertical lines.
inline SteinerSystem affine_plane(int q) {
  if (!is_prime(q)) throw std::invalid_argument("affine_plane: q must be prime");
  if (q * q > kMaskVertices) throw std::invalid_argument("affine_plane: q^2 must be <= 64");
  SteinerSystem f{q * q, q, 2, {}, {}};
  const auto point = [q](int x, int y) { return Mask{1} << (x * q + y); };
  for (int m = 0; m < q; ++m)
    for (int b = 0; b < q; ++b) {
      Mask line = 0;
      for (int x = 0; x < q; ++x) line |= point(x, (m * x + b) % q);
      f.blocks.push_back(line);
      f.parallel_class.push_back(m);
    }
  for (int x = 0; x < q; ++x) {
    Mask line = 0;
    for (int y = 0; y < q; ++y) line |= point(x, y);
    f.blocks.push_back(line);
    f.parallel_class.push_back(q);
  }
  return f;
}

namespace detail {

inline Mask block_of(std::initializer_list<int> one_based) {
  Mask m = 0;
  for (int v : one_based) m |= Mask{1} << (v - 1);
  return m;
}

}  // namespace detail

// "fano" = S(2,3,7), "s348" = S(3,4,8) (planes of AG(3,2)), "ag23" = AG(2,3).
inline SteinerSystem builtin_design(std::string_view name) {
  using detail::block_of;
  if (name == "fano") {
    return {7, 3, 2,
            {block_of({1, 2, 3}), block_of({1, 4, 5}), block_of({1, 6, 7}), block_of({2, 4, 6}),
             block_of({2, 5, 7}), block_of({3, 4, 7}), block_of({3, 5, 6})},
            {}};
  }
  if (name == "s348") {
    // Points are GF(2)^3 ({1..8} = vector value + 1); blocks are the 14
    // affine planes a.x = b, listed in colex order.
    SteinerSystem f{8, 4, 3, {}, {}};
    for (int a = 1; a < 8; ++a)
      for (int b = 0; b < 2; ++b) {
        Mask plane = 0;
        for (int x = 0; x < 8; ++x)
          if (std::popcount(static_cast<unsigned>(a & x)) % 2 == b) plane |= Mask{1} << x;
        f.blocks.push_back(plane);
      }
    std::sort(f.blocks.begin(), f.blocks.end());
    return f;
  }
  if (name == "ag23") {
    // Grid (row, col) -> 3*row + col + 1; classes: rows, columns, two diagonal families.
    return {9, 3, 2,
            {block_of({1, 2, 3}), block_of({4, 5, 6}), block_of({7, 8, 9}), block_of({1, 4, 7}),
             block_of({2, 5, 8}), block_of({3, 6, 9}), block_of({1, 5, 9}), block_of({2, 6, 7}),
             block_of({3, 4, 8}), block_of({1, 6, 8}), block_of({2, 4, 9}), block_of({3, 5, 7})},
            {0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3}};
  }
  throw std::invalid_argument("unknown design '" + std::string(name) + "' (expected fano, s348 or ag23)");
}

enum class BlockOrder { given, complement_paired };

inline std::optional<BlockOrder> parse_block_order(std::string_view name) noexcept {
  if (name == "given") return BlockOrder::given;
  if (name == "complement-paired") return BlockOrder::complement_paired;
  return std::nullopt;
}

struct BlockPartition {
  int t = 0;
  std::vector<std::vector<std::size_t>> classes;  // block indices
  std::size_t lower_bound = 0;  // most blocks through a single t-set

  std::size_t class_count() const noexcept { return classes.size(); }
};

// Blocks through one t-set pairwise share >= t points, so no partition
// without conflicts uses fewer classes than the largest such family.
inline std::size_t max_blocks_through_tset(const SteinerSystem& f, int t) {
  std::vector<std::size_t> through(checked_binom(f.n, t), 0);
  for (Mask b : f.blocks) {
    std::vector<int> pts;
    for (Mask m = b; m != 0; m &= m - 1) pts.push_back(std::countr_zero(m));
    for_each_subset_rank(pts, t, [&](Rank r) { ++through[r]; });
  }
  return through.empty() ? 0 : *std::max_element(through.begin(), through.end());
}

// C(n-t, k-t)/C(h-t, k-t): blocks through any t-set, for t <= k.
inline std::uint64_t tset_degree(const SteinerSystem& f, int t) {
  return binom(f.n - t, f.k - t) / binom(f.h - t, f.k - t);
}

inline std::vector<std::size_t> block_order(const SteinerSystem& f, BlockOrder order) {
  std::vector<std::size_t> idx;
  if (order == BlockOrder::given) {
    for (std::size_t i = 0; i < f.blocks.size(); ++i) idx.push_back(i);
    return idx;
  }
  std::vector<bool> placed(f.blocks.size(), false);
  const Mask all = low_bits(f.n);
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    if (placed[i]) continue;
    placed[i] = true;
    idx.push_back(i);
    const Mask comp = all & ~f.blocks[i];
    for (std::size_t j = i + 1; j < f.blocks.size(); ++j)
      if (!placed[j] && f.blocks[j] == comp) {
        placed[j] = true;
        idx.push_back(j);
        break;
      }
  }
  return idx;
}

// First fit: each block goes to the lowest class where it shares < t points
// with every member.
inline BlockPartition partition_blocks(const SteinerSystem& f, int t, BlockOrder order = BlockOrder::given) {
  if (t < 1 || t > f.k) throw std::invalid_argument("partition_blocks: t must be in [1, k]");
  BlockPartition out;
  out.t = t;
  for (auto i : block_order(f, order)) {
    std::size_t chosen = out.classes.size();
    for (std::size_t c = 0; c < out.classes.size() && chosen == out.classes.size(); ++c) {
      const bool clash = std::any_of(out.classes[c].begin(), out.classes[c].end(), [&](std::size_t j) {
        return std::popcount(f.blocks[i] & f.blocks[j]) >= t;
      });
      if (!clash) chosen = c;
    }
    if (chosen == out.classes.size()) out.classes.emplace_back();
    out.classes[chosen].push_back(i);
  }
  out.lower_bound = max_blocks_through_tset(f, t);
  return out;
}

// Classes taken from the parallel-class tags.
inline std::vector<std::vector<std::size_t>> tagged_classes(const SteinerSystem& f) {
  if (f.parallel_class.empty()) throw std::invalid_argument("design has no parallel class tags");
  const int count = *std::max_element(f.parallel_class.begin(), f.parallel_class.end()) + 1;
  std::vector<std::vector<std::size_t>> classes(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < f.blocks.size(); ++i) classes[f.parallel_class[i]].push_back(i);
  return classes;
}

}  // namespace hypercolor
