#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Coloring container and colex enumeration.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hypercolor/hypercolor.hpp"

namespace oracle {

using Edge = std::vector<int>;  // sorted 0-based vertices

inline int common(const Edge& a, const Edge& b) {
  int c = 0;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) ++c;
  return c;
}

// Merge groups while any two groups hold edges sharing >= t vertices.
inline std::set<std::set<Edge>> components(const std::vector<Edge>& edges, int t) {
  std::vector<std::vector<Edge>> groups;
  for (const auto& e : edges) groups.push_back({e});
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < groups.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < groups.size() && !merged; ++j)
        for (const auto& a : groups[i])
          for (const auto& b : groups[j])
            if (!merged && common(a, b) >= t) {
              groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
              groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
              merged = true;
            }
  }
  std::set<std::set<Edge>> out;
  for (const auto& g : groups) out.insert(std::set<Edge>(g.begin(), g.end()));
  return out;
}

// All s-subsets of {0..n-1} contained in some edge, by scanning every s-subset.
inline std::set<Edge> shadow(const std::vector<Edge>& edges, int n, int s) {
  std::set<Edge> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != s) continue;
    Edge sub;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) sub.push_back(v);
    for (const auto& e : edges)
      if (std::includes(e.begin(), e.end(), sub.begin(), sub.end())) {
        out.insert(sub);
        break;
      }
  }
  return out;
}

inline std::vector<Edge> all_edges(int n, int k) {
  std::vector<Edge> out;
  for (std::uint64_t r = 0; r < hypercolor::binom(n, k); ++r) out.push_back(hypercolor::colex_unrank_vertices(r, n, k));
  return out;
}

// max over colors and naive components of the naive shadow size.
inline std::uint64_t measure(const hypercolor::Coloring& c, int t, int s) {
  const auto edges = all_edges(c.n(), c.k());
  std::uint64_t best = 0;
  for (int color = 1; color <= c.r(); ++color) {
    std::vector<Edge> cls;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (c.color(i) == color) cls.push_back(edges[i]);
    for (const auto& comp : components(cls, t)) {
      const std::vector<Edge> members(comp.begin(), comp.end());
      best = std::max<std::uint64_t>(best, shadow(members, c.n(), s).size());
    }
  }
  return best;
}

// min over all r^E colorings, no symmetry reduction.
inline std::uint64_t raw_min(int n, int r, int k, int t, int s) {
  const auto e = hypercolor::binom(n, k);
  std::vector<hypercolor::Color> colors(e, 1);
  std::uint64_t best = UINT64_MAX;
  for (;;) {
    const hypercolor::Coloring c(n, k, r, colors);
    best = std::min(best, hypercolor::measure(c, t, s).value);
    std::size_t i = 0;
    while (i < e && colors[i] == r) colors[i++] = 1;
    if (i == e) break;
    ++colors[i];
  }
  return best;
}

}  // namespace oracle
