#pragma once

// Two vertex-set representations behind one traits interface: a 64-bit mask
// (n <= 64, the hot path) and a sorted vertex list (any n).

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hypercolor/colex.hpp"

namespace hypercolor {

struct VertexList {
  std::vector<int> vertices;  // sorted ascending, 0-based

  friend bool operator==(const VertexList&, const VertexList&) = default;
};

struct VertexListHash {
  std::size_t operator()(const VertexList& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int v : s.vertices) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

template <class Set>
struct set_traits;

template <>
struct set_traits<Mask> {
  using hash = std::hash<Mask>;
  static constexpr int max_vertices = kMaskVertices;

  static int size(Mask m) noexcept { return std::popcount(m); }
  static int intersection_size(Mask a, Mask b) noexcept { return std::popcount(a & b); }
  static bool colex_less(Mask a, Mask b) noexcept { return a < b; }
  static bool within(Mask m, int n) noexcept { return (m & ~low_bits(n)) == 0; }
  static Mask join(Mask a, Mask b) noexcept { return a | b; }

  static Mask from_vertices(std::span<const int> zero_based) {
    Mask m = 0;
    for (int v : zero_based) {
      if (v < 0 || v >= kMaskVertices) throw std::invalid_argument("vertex does not fit in a 64-bit mask");
      m |= Mask{1} << v;
    }
    return m;
  }

  static std::vector<int> vertices(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  // f(sub) for every s-subset of m.
  template <class F>
  static void for_each_subset(Mask m, int s, F&& f) {
    std::array<int, kMaskVertices> bits{};
    int k = 0;
    for (Mask x = m; x != 0; x &= x - 1) bits[k++] = std::countr_zero(x);
    if (s < 0 || s > k) return;
    std::array<int, kMaskVertices> pos{};
    std::span<int> p(pos.data(), static_cast<std::size_t>(s));
    first_combination(p);
    do {
      Mask sub = 0;
      for (int i = 0; i < s; ++i) sub |= Mask{1} << bits[p[i]];
      f(sub);
    } while (next_combination(p, k));
  }
};

template <>
struct set_traits<VertexList> {
  using hash = VertexListHash;
  static constexpr int max_vertices = 1 << 20;

  static int size(const VertexList& s) noexcept { return static_cast<int>(s.vertices.size()); }

  static int intersection_size(const VertexList& a, const VertexList& b) noexcept {
    int count = 0;
    auto i = a.vertices.begin();
    auto j = b.vertices.begin();
    while (i != a.vertices.end() && j != b.vertices.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++count, ++i, ++j;
      }
    }
    return count;
  }

  // Colex: compare from the largest element down.
  static bool colex_less(const VertexList& a, const VertexList& b) noexcept {
    return std::lexicographical_compare(a.vertices.rbegin(), a.vertices.rend(), b.vertices.rbegin(),
                                        b.vertices.rend());
  }

  static bool within(const VertexList& s, int n) noexcept {
    return s.vertices.empty() || (s.vertices.front() >= 0 && s.vertices.back() < n);
  }

  static VertexList join(const VertexList& a, const VertexList& b) {
    VertexList out;
    std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                   std::back_inserter(out.vertices));
    return out;
  }

  static VertexList from_vertices(std::span<const int> zero_based) {
    VertexList s{std::vector<int>(zero_based.begin(), zero_based.end())};
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
    return s;
  }

  static std::vector<int> vertices(const VertexList& s) { return s.vertices; }

  template <class F>
  static void for_each_subset(const VertexList& m, int s, F&& f) {
    const int k = size(m);
    if (s < 0 || s > k) return;
    std::vector<int> pos(static_cast<std::size_t>(s));
    first_combination(pos);
    VertexList sub;
    sub.vertices.resize(static_cast<std::size_t>(s));
    do {
      for (int i = 0; i < s; ++i) sub.vertices[i] = m.vertices[pos[i]];
      f(sub);
    } while (next_combination(pos, k));
  }
};

}  // namespace hypercolor
