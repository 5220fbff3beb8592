#pragma once

// Edge-colorings of the complete k-graph K^k_n and the measurement
// M(n,r,k,t,s;c): the largest s-shadow of a monochromatic t-tight component.
//
// Everything here works on colex ranks and streams edges, so it does not
// need the 64-vertex mask representation.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercolor/colex.hpp"
#include "hypercolor/hypergraph.hpp"
#include "hypercolor/union_find.hpp"

namespace hypercolor {

using Color = std::uint8_t;

inline constexpr int kMaxColors = 255;

class Coloring {
 public:
  Coloring(int n, int k, int r, std::vector<Color> colors) : n_(n), k_(k), r_(r), colors_(std::move(colors)) {
    check_shape(n, k, r);
    if (colors_.size() != checked_binom(n, k))
      throw std::invalid_argument("coloring: expected " + std::to_string(binom(n, k)) + " colors, got " +
                                  std::to_string(colors_.size()));
    for (std::size_t i = 0; i < colors_.size(); ++i)
      if (colors_[i] < 1 || colors_[i] > r_)
        throw std::invalid_argument("coloring: edge rank " + std::to_string(i) + " has color " +
                                    std::to_string(int{colors_[i]}) + " outside [1, " + std::to_string(r_) + "]");
  }

  static Coloring filled(int n, int k, int r, Color color) {
    check_shape(n, k, r);
    return Coloring(n, k, r, std::vector<Color>(checked_binom(n, k), color));
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int r() const noexcept { return r_; }
  std::uint64_t edge_count() const noexcept { return colors_.size(); }
  std::span<const Color> colors() const noexcept { return colors_; }

  Color color(Rank edge) const { return colors_.at(edge); }
  Color color_of(Mask edge) const { return colors_.at(colex_rank(edge, n_, k_)); }

  void set_color(Rank edge, Color c) {
    if (c < 1 || c > r_) throw std::invalid_argument("coloring: color outside [1, r]");
    colors_.at(edge) = c;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

  static void check_shape(int n, int k, int r) {
    if (n < 1) throw std::invalid_argument("coloring: n must be positive");
    if (k < 1 || k > n) throw std::invalid_argument("coloring: k must be in [1, n]");
    if (k > kMaskVertices) throw std::invalid_argument("coloring: k above 64 is not supported");
    if (r < 1 || r > kMaxColors) throw std::invalid_argument("coloring: r must be in [1, 255]");
    if (checked_binom(n, k) > std::numeric_limits<std::uint32_t>::max())
      throw std::length_error("coloring: C(n,k) exceeds 2^32 edges");
  }

 private:
  int n_;
  int k_;
  int r_;
  std::vector<Color> colors_;
};

// H_i(c) as an explicit hypergraph (n <= 64).
inline Hypergraph color_class(const Coloring& c, Color i) {
  Hypergraph h(c.n(), c.k());
  for (Rank e = 0; e < c.edge_count(); ++e)
    if (c.color(e) == i) h.add_edge(colex_unrank(e, c.n(), c.k()));
  return h;
}

struct MeasureResult {
  std::uint64_t value = 0;
  int witness_color = 0;
  std::vector<Rank> witness_component;  // ascending edge ranks
};

struct MonochromaticComponent {
  Color color = 0;
  std::vector<Rank> edges;  // ascending edge ranks
};

namespace detail {

inline void check_measure_params(int k, int t, int s) {
  if (t < 1 || s < 1 || std::max(t + 1, s) > k)
    throw std::invalid_argument("parameters must satisfy t >= 1, s >= 1 and max(t+1, s) <= k (got t=" +
                                std::to_string(t) + ", s=" + std::to_string(s) + ", k=" + std::to_string(k) + ")");
}

// Component root of every edge rank: for each t-set, the edges containing
// it are streamed and chained to the previous edge of the same color.
inline std::vector<std::uint32_t> monochromatic_roots(const Coloring& c, int t) {
  const int n = c.n();
  const int k = c.k();
  UnionFind uf(c.edge_count());
  std::vector<std::int64_t> last(static_cast<std::size_t>(c.r()) + 1);
  const auto colors = c.colors();
  std::vector<int> tset(static_cast<std::size_t>(t));
  first_combination(tset);
  do {
    std::fill(last.begin(), last.end(), -1);
    for_each_superset_rank(tset, n, k, [&](Rank e) {
      auto& prev = last[colors[e]];
      if (prev < 0) {
        prev = static_cast<std::int64_t>(e);
      } else {
        uf.unite(static_cast<std::uint32_t>(prev), static_cast<std::uint32_t>(e));
      }
    });
  } while (next_combination(tset, n));
  std::vector<std::uint32_t> roots(c.edge_count());
  for (std::uint32_t e = 0; e < roots.size(); ++e) roots[e] = uf.find(e);
  return roots;
}

// |E^{(s)}(C)| indexed by root; each s-set is counted once per distinct
// component among the edges containing it.
inline std::vector<std::uint64_t> shadow_counts_by_root(const Coloring& c, std::span<const std::uint32_t> roots,
                                                        int s) {
  std::vector<std::uint64_t> counts(roots.size(), 0);
  if (s == c.k()) {
    for (auto root : roots) ++counts[root];
    return counts;
  }
  constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> stamp(roots.size(), kUnset);
  std::vector<int> sset(static_cast<std::size_t>(s));
  first_combination(sset);
  std::uint64_t s_rank = 0;
  do {
    for_each_superset_rank(sset, c.n(), c.k(), [&](Rank e) {
      const auto root = roots[e];
      if (stamp[root] != s_rank) {
        stamp[root] = s_rank;
        ++counts[root];
      }
    });
    ++s_rank;
  } while (next_combination(sset, c.n()));
  return counts;
}

}  // namespace detail

// Monochromatic t-tight components, sorted by smallest edge rank.
inline std::vector<MonochromaticComponent> monochromatic_components(const Coloring& c, int t) {
  detail::check_tightness(t, c.k());
  const auto roots = detail::monochromatic_roots(c, t);
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> slot(roots.size(), kNone);
  std::vector<MonochromaticComponent> out;
  for (Rank e = 0; e < roots.size(); ++e) {
    auto& idx = slot[roots[e]];
    if (idx == kNone) {
      idx = static_cast<std::uint32_t>(out.size());
      out.push_back({c.color(e), {}});
    }
    out[idx].edges.push_back(e);
  }
  return out;
}

// Ties on value go to the smaller color index, then to the component with the
// smaller minimum edge rank.
inline MeasureResult measure(const Coloring& c, int t, int s) {
  detail::check_measure_params(c.k(), t, s);
  const auto roots = detail::monochromatic_roots(c, t);
  const auto counts = detail::shadow_counts_by_root(c, roots, s);

  // Roots are visited at their smallest edge rank, so strict comparison on
  // (value, -color) keeps the earliest component among equals.
  MeasureResult best;
  std::uint32_t best_root = 0;
  bool found = false;
  std::vector<bool> visited(roots.size(), false);
  for (Rank e = 0; e < roots.size(); ++e) {
    const auto root = roots[e];
    if (visited[root]) continue;
    visited[root] = true;
    const int color = c.color(e);
    const bool better = !found || counts[root] > best.value ||
                        (counts[root] == best.value && color < best.witness_color);
    if (better) {
      found = true;
      best.value = counts[root];
      best.witness_color = color;
      best_root = root;
    }
  }
  if (found)
    for (Rank e = 0; e < roots.size(); ++e)
      if (roots[e] == best_root) best.witness_component.push_back(e);
  return best;
}

}  // namespace hypercolor
