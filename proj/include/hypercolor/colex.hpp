#pragma once

// Binomial coefficients and colexicographic ranking of k-subsets.
//
// Vertices are 0-based internally: bit i of a Mask, or entry i of a vertex
// list, denotes vertex i+1 of {1..n}. The text formats convert at the edge.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercolor {

using Mask = std::uint64_t;
using Rank = std::uint64_t;

inline constexpr int kMaskVertices = 64;
inline constexpr std::uint64_t kBinomSaturated = std::numeric_limits<std::uint64_t>::max();

// n choose k, saturating at kBinomSaturated on overflow.
constexpr std::uint64_t binom(std::int64_t n, std::int64_t k) noexcept {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > kBinomSaturated) return kBinomSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace detail {

inline constexpr int kTableN = 1024;
inline constexpr int kTableK = 64;

struct BinomTable {
  std::vector<std::uint64_t> cells;
  BinomTable() : cells((kTableN + 1) * (kTableK + 1)) {
    for (int n = 0; n <= kTableN; ++n)
      for (int k = 0; k <= kTableK; ++k) cells[n * (kTableK + 1) + k] = binom(n, k);
  }
};

inline const BinomTable& binom_table() {
  static const BinomTable table;
  return table;
}

}  // namespace detail

// Table-backed binomial for hot loops; falls back to binom() off-table.
inline std::uint64_t fast_binom(int n, int k) noexcept {
  if (n >= 0 && k >= 0 && n <= detail::kTableN && k <= detail::kTableK)
    return detail::binom_table().cells[n * (detail::kTableK + 1) + k];
  return binom(n, k);
}

// Number of k-subsets of an n-set, throwing if it does not fit in 64 bits.
inline std::uint64_t checked_binom(int n, int k) {
  const auto value = binom(n, k);
  if (value == kBinomSaturated)
    throw std::overflow_error("C(" + std::to_string(n) + "," + std::to_string(k) +
                              ") does not fit in 64 bits");
  return value;
}

inline Mask low_bits(int n) noexcept { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

// Rank of a sorted vertex list in colex order.
inline Rank colex_rank(std::span<const int> sorted_vertices) noexcept {
  Rank rank = 0;
  for (std::size_t i = 0; i < sorted_vertices.size(); ++i)
    rank += fast_binom(sorted_vertices[i], static_cast<int>(i) + 1);
  return rank;
}

inline Rank colex_rank(Mask edge, int n, int k) {
  if (n < 1 || n > kMaskVertices) throw std::invalid_argument("colex_rank: n must be in [1, 64]");
  if ((edge & ~low_bits(n)) != 0) throw std::invalid_argument("colex_rank: vertex outside {1..n}");
  if (std::popcount(edge) != k) throw std::invalid_argument("colex_rank: edge does not have exactly k vertices");
  Rank rank = 0;
  int i = 1;
  for (Mask m = edge; m != 0; m &= m - 1, ++i) rank += fast_binom(std::countr_zero(m), i);
  return rank;
}

// Writes the k vertices of the rank-th k-subset (colex) into out, ascending.
inline void colex_unrank_into(Rank rank, int n, int k, std::span<int> out) {
  if (k < 0 || k > n) throw std::invalid_argument("colex_unrank: k must be in [0, n]");
  if (rank >= checked_binom(n, k)) throw std::out_of_range("colex_unrank: rank out of range");
  int hi = n - 1;
  for (int i = k; i >= 1; --i) {
    while (fast_binom(hi, i) > rank) --hi;
    out[i - 1] = hi;
    rank -= fast_binom(hi, i);
    --hi;
  }
}

inline std::vector<int> colex_unrank_vertices(Rank rank, int n, int k) {
  std::vector<int> out(static_cast<std::size_t>(std::max(k, 0)));
  colex_unrank_into(rank, n, k, out);
  return out;
}

inline Mask colex_unrank(Rank rank, int n, int k) {
  if (n < 1 || n > kMaskVertices) throw std::invalid_argument("colex_unrank: n must be in [1, 64]");
  std::array<int, kMaskVertices> buf{};
  colex_unrank_into(rank, n, k, std::span<int>(buf.data(), static_cast<std::size_t>(std::max(k, 0))));
  Mask m = 0;
  for (int i = 0; i < k; ++i) m |= Mask{1} << buf[i];
  return m;
}

// Advances a sorted combination of {0..n-1} to its colex successor.
// Returns false (leaving c untouched) when c is the last combination.
inline bool next_combination(std::span<int> c, int n) noexcept {
  const auto k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int limit = (i + 1 < k) ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<int>(j);
      return true;
    }
  }
  return false;
}

inline void first_combination(std::span<int> c) noexcept {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<int>(i);
}

// Calls f(rank) for every s-subset of the sorted vertex list, in colex order
// of the chosen positions.
template <class F>
void for_each_subset_rank(std::span<const int> vertices, int s, F&& f) {
  const int k = static_cast<int>(vertices.size());
  if (s < 0 || s > k) return;
  std::array<int, kMaskVertices> pos{};
  std::array<int, kMaskVertices> sub{};
  std::span<int> p(pos.data(), static_cast<std::size_t>(s));
  first_combination(p);
  do {
    for (int i = 0; i < s; ++i) sub[i] = vertices[p[i]];
    f(colex_rank(std::span<const int>(sub.data(), static_cast<std::size_t>(s))));
  } while (next_combination(p, k));
}

// Calls f(rank) for every k-superset of the sorted base set inside {0..n-1}.
template <class F>
void for_each_superset_rank(std::span<const int> base, int n, int k, F&& f) {
  const int b = static_cast<int>(base.size());
  if (b > k || k > n) return;
  std::vector<int> complement;
  complement.reserve(static_cast<std::size_t>(n - b));
  for (int v = 0, j = 0; v < n; ++v) {
    if (j < b && base[j] == v) {
      ++j;
    } else {
      complement.push_back(v);
    }
  }
  const int extra = k - b;
  std::array<int, kMaskVertices> pick{};
  std::array<int, kMaskVertices> merged{};
  std::span<int> p(pick.data(), static_cast<std::size_t>(extra));
  first_combination(p);
  const int m = static_cast<int>(complement.size());
  do {
    int i = 0, j = 0, o = 0;
    while (i < b || j < extra) {
      if (j >= extra || (i < b && base[i] < complement[p[j]])) {
        merged[o++] = base[i++];
      } else {
        merged[o++] = complement[p[j++]];
      }
    }
    f(colex_rank(std::span<const int>(merged.data(), static_cast<std::size_t>(k))));
  } while (next_combination(p, m));
}

}  // namespace hypercolor
