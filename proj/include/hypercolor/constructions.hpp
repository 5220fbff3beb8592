#pragma once

// Explicit colorings: constant, the three two-color 3-graph colorings, the
// Steiner-system coloring and the balanced blow-up.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercolor/bounds.hpp"
#include "hypercolor/coloring.hpp"
#include "hypercolor/designs.hpp"

namespace hypercolor {

inline constexpr Color kRed = 1;
inline constexpr Color kBlue = 2;

// Disjoint cover of {1..n} by named parts (1-based vertex lists).
struct PartitionSpec {
  std::vector<std::string> roles;
  std::vector<std::vector<int>> parts;

  void validate(int n) const {
    if (roles.size() != parts.size()) throw std::invalid_argument("partition: one role per part");
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& part : parts)
      for (int v : part) {
        if (v < 1 || v > n) throw std::invalid_argument("partition: vertex outside {1..n}");
        if (seen[v]++) throw std::invalid_argument("partition: parts overlap");
      }
    for (int v = 1; v <= n; ++v)
      if (!seen[v]) throw std::invalid_argument("partition: vertex " + std::to_string(v) + " uncovered");
  }

  // Part index of every 0-based vertex.
  std::vector<int> membership(int n) const {
    std::vector<int> of(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (int v : parts[p]) of[v - 1] = static_cast<int>(p);
    return of;
  }
};

// {1..first} and {first+1..n}.
inline PartitionSpec split_partition(int n, int first, std::string first_role, std::string second_role) {
  PartitionSpec spec{{std::move(first_role), std::move(second_role)}, {{}, {}}};
  for (int v = 1; v <= n; ++v) spec.parts[v <= first ? 0 : 1].push_back(v);
  spec.validate(n);
  return spec;
}

// Blow-up parts: vertex i goes to part ((i-1) mod N) + 1.
inline PartitionSpec round_robin_partition(int n, int parts) {
  PartitionSpec spec;
  for (int p = 1; p <= parts; ++p) {
    spec.roles.push_back("A" + std::to_string(p));
    spec.parts.emplace_back();
  }
  for (int v = 1; v <= n; ++v) spec.parts[(v - 1) % parts].push_back(v);
  spec.validate(n);
  return spec;
}

// Colors every edge of K^k_n; pick receives the sorted 0-based vertices.
template <class Pick>
Coloring build_coloring(int n, int k, int r, Pick&& pick) {
  Coloring::check_shape(n, k, r);
  std::vector<Color> colors;
  colors.reserve(checked_binom(n, k));
  std::vector<int> e(static_cast<std::size_t>(k));
  first_combination(e);
  do {
    colors.push_back(pick(std::span<const int>(e)));
  } while (next_combination(e, n));
  return Coloring(n, k, r, std::move(colors));
}

inline Coloring all_red(int n, int k, int r) { return Coloring::filled(n, k, r, kRed); }

namespace detail {

inline void check_two_color_n(int n, const char* who) {
  if (n < 3) throw std::invalid_argument(std::string(who) + ": n must be >= 3");
}

inline int count_in(std::span<const int> e, const std::vector<int>& of, int part) {
  return static_cast<int>(std::count_if(e.begin(), e.end(), [&](int v) { return of[v] == part; }));
}

}  // namespace detail

inline PartitionSpec majority_partition(int n) { return split_partition(n, (n + 1) / 2, "V_r", "V_b"); }

// Red iff the edge has more vertices in V_r = {1..ceil(n/2)} than in V_b.
inline Coloring majority_coloring(int n) {
  detail::check_two_color_n(n, "majority_coloring");
  const auto of = majority_partition(n).membership(n);
  return build_coloring(n, 3, 2, [&](std::span<const int> e) {
    const int in_r = detail::count_in(e, of, 0);
    return in_r > 3 - in_r ? kRed : kBlue;
  });
}

inline PartitionSpec two_clique_partition(int n) {
  const auto a = static_cast<int>(std::floor(two_clique_fraction() * n));
  return split_partition(n, a, "A", "B");
}

// Red inside A = {1..floor(x0 n)} or inside its complement B, blue across.
inline Coloring two_clique_coloring(int n) {
  detail::check_two_color_n(n, "two_clique_coloring");
  const auto of = two_clique_partition(n).membership(n);
  return build_coloring(n, 3, 2, [&](std::span<const int> e) {
    const int in_a = detail::count_in(e, of, 0);
    return (in_a == 0 || in_a == 3) ? kRed : kBlue;
  });
}

inline PartitionSpec parity_partition(int n) { return split_partition(n, (n + 1) / 2, "U_r", "U_b"); }

// Red iff the edge meets U_r = {1..ceil(n/2)} in 1 or 3 vertices.
inline Coloring parity_coloring(int n) {
  detail::check_two_color_n(n, "parity_coloring");
  const auto of = parity_partition(n).membership(n);
  return build_coloring(n, 3, 2, [&](std::span<const int> e) {
    return detail::count_in(e, of, 0) % 2 == 1 ? kRed : kBlue;
  });
}

// Parts A_1..A_N (N = n0 - k + 1) of V_n and the padding map phi(L) = L plus
// the first k-|L| reserved vertices N+1..n0 of V_{n0}. 0-based throughout:
// part p stands for base vertex p, reserved vertices are N..n0-1.
class BlowUpMap {
 public:
  BlowUpMap(int n0, int k, int n) : n0_(n0), k_(k), n_(n), parts_(n0 - k + 1) {
    if (n0 < k || k < 1) throw std::invalid_argument("blow_up: need n0 >= k >= 1");
    if (n < n0) throw std::invalid_argument("blow_up: need n >= n0");
  }

  int n0() const noexcept { return n0_; }
  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int parts() const noexcept { return parts_; }

  int part_of(int vertex) const noexcept { return vertex % parts_; }

  // Sorted set of parts touched by the sorted vertex list.
  std::vector<int> index_set(std::span<const int> vertices) const {
    std::vector<int> out;
    for (int v : vertices) out.push_back(part_of(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<int> phi(std::span<const int> index_set) const {
    if (index_set.empty() || static_cast<int>(index_set.size()) > k_)
      throw std::invalid_argument("blow_up: index set size must be in [1, k]");
    std::vector<int> out(index_set.begin(), index_set.end());
    for (int j = 0; j < k_ - static_cast<int>(index_set.size()); ++j) out.push_back(parts_ + j);
    return out;
  }

  Rank base_edge(std::span<const int> vertices) const {
    const auto mapped = phi(index_set(vertices));
    return colex_rank(mapped);
  }

 private:
  int n0_;
  int k_;
  int n_;
  int parts_;
};

// c(e) = c0(phi(I_e)).
inline Coloring blow_up(const Coloring& c0, int n) {
  const BlowUpMap map(c0.n(), c0.k(), n);
  return build_coloring(n, c0.k(), c0.r(), [&](std::span<const int> e) { return c0.color(map.base_edge(e)); });
}

// sum_{l=1}^{s} ceil(n/N)^s C(s-1,l-1) M(n0,r,k,t,l;c0), the bound the
// blow-up of c0 to n vertices satisfies.
inline double blowup_upper_bound(const Coloring& c0, int n, int t, int s) {
  detail::check_measure_params(c0.k(), t, s);
  const BlowUpMap map(c0.n(), c0.k(), n);
  const auto m = (n + map.parts() - 1) / map.parts();
  const double ms = std::pow(static_cast<double>(m), s);
  double total = 0.0;
  for (int l = 1; l <= s; ++l)
    total += ms * static_cast<double>(binom(s - 1, l - 1)) * static_cast<double>(measure(c0, t, l).value);
  return total;
}

// Colors each k-set by the class of the unique block containing it. Every
// class must have its blocks pairwise sharing at most t-1 points.
inline Coloring steiner_coloring(const SteinerSystem& f, const std::vector<std::vector<std::size_t>>& classes,
                                 int t) {
  validate_steiner(f);
  if (classes.empty() || classes.size() > kMaxColors)
    throw std::invalid_argument("steiner_coloring: class count must be in [1, 255]");
  std::vector<int> class_of(f.blocks.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto b : classes[c]) {
      if (b >= f.blocks.size()) throw std::invalid_argument("steiner_coloring: block index out of range");
      if (class_of[b] != -1) throw std::invalid_argument("steiner_coloring: block in two classes");
      class_of[b] = static_cast<int>(c);
    }
  if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end())
    throw std::invalid_argument("steiner_coloring: classes do not cover every block");
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t i = 0; i < classes[c].size(); ++i)
      for (std::size_t j = i + 1; j < classes[c].size(); ++j)
        if (std::popcount(f.blocks[classes[c][i]] & f.blocks[classes[c][j]]) >= t)
          throw std::invalid_argument("steiner_coloring: class " + std::to_string(c + 1) + " has two blocks sharing " +
                                      std::to_string(t) + " or more points");
  std::vector<Color> colors(checked_binom(f.n, f.k), 0);
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    std::vector<int> pts;
    for (Mask m = f.blocks[b]; m != 0; m &= m - 1) pts.push_back(std::countr_zero(m));
    for_each_subset_rank(pts, f.k, [&](Rank r) { colors[r] = static_cast<Color>(class_of[b] + 1); });
  }
  return Coloring(f.n, f.k, static_cast<int>(classes.size()), std::move(colors));
}

}  // namespace hypercolor
