#pragma once

// k-uniform hypergraphs, t-tight components and s-shadows.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hypercolor/union_find.hpp"
#include "hypercolor/vertex_set.hpp"

namespace hypercolor {

template <class Set>
class basic_hypergraph {
 public:
  using set_type = Set;
  using traits = set_traits<Set>;

  basic_hypergraph(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > traits::max_vertices)
      throw std::invalid_argument("hypergraph: n=" + std::to_string(n) + " out of range for this representation");
    if (k < 1 || k > n) throw std::invalid_argument("hypergraph: uniformity k must be in [1, n]");
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<const Set> edges() const noexcept { return edges_; }
  const Set& edge(std::size_t i) const { return edges_.at(i); }
  bool contains(const Set& e) const { return index_.contains(e); }

  void add_edge(const Set& e) {
    if (traits::size(e) != k_)
      throw std::invalid_argument("hypergraph: edge has " + std::to_string(traits::size(e)) +
                                  " vertices, expected " + std::to_string(k_));
    if (!traits::within(e, n_)) throw std::invalid_argument("hypergraph: vertex outside {1..n}");
    if (!index_.insert(e).second) throw std::invalid_argument("hypergraph: duplicate edge");
    edges_.push_back(e);
  }

  // Edge given as 0-based vertex indices.
  void add_edge(std::span<const int> zero_based) { add_edge(traits::from_vertices(zero_based)); }

  // Adds e unless already present; returns whether it was added.
  bool insert(const Set& e) {
    if (contains(e)) return false;
    add_edge(e);
    return true;
  }

 private:
  int n_;
  int k_;
  std::vector<Set> edges_;
  std::unordered_set<Set, typename traits::hash> index_;
};

using Hypergraph = basic_hypergraph<Mask>;
using WideHypergraph = basic_hypergraph<VertexList>;

// TC_t(H): each component is a list of indices into H.edges(), sorted by
// colex order of the edges; components are sorted by their colex-smallest edge.
struct ComponentPartition {
  int t = 0;
  std::vector<std::vector<std::size_t>> components;

  std::size_t size() const noexcept { return components.size(); }
};

template <class Set>
struct basic_shadow_set {
  int s = 0;
  std::vector<Set> members;  // colex order

  std::size_t count() const noexcept { return members.size(); }
  bool contains(const Set& x) const {
    return std::binary_search(members.begin(), members.end(), x, set_traits<Set>::colex_less);
  }
};

using ShadowSet = basic_shadow_set<Mask>;

namespace detail {

template <class Set>
void sort_components(std::span<const Set> edges, std::vector<std::vector<std::size_t>>& comps) {
  const auto less = [&](std::size_t a, std::size_t b) { return set_traits<Set>::colex_less(edges[a], edges[b]); };
  for (auto& c : comps) std::sort(c.begin(), c.end(), less);
  std::sort(comps.begin(), comps.end(),
            [&](const auto& a, const auto& b) { return less(a.front(), b.front()); });
}

template <class Set>
std::vector<std::vector<std::size_t>> group_by_root(std::span<const Set> edges, UnionFind& uf) {
  std::unordered_map<std::uint32_t, std::size_t> slot;
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto root = uf.find(static_cast<std::uint32_t>(i));
    auto [it, fresh] = slot.try_emplace(root, comps.size());
    if (fresh) comps.emplace_back();
    comps[it->second].push_back(i);
  }
  sort_components(edges, comps);
  return comps;
}

inline void check_tightness(int t, int k) {
  if (t < 1 || t > k - 1)
    throw std::invalid_argument("tightness t=" + std::to_string(t) + " must satisfy 1 <= t <= k-1 (k=" +
                                std::to_string(k) + ")");
}

}  // namespace detail

// Two edges meet in >= t vertices iff they share a t-subset, so unioning
// every bucket of edges keyed by a common t-subset yields TC_t(H).
template <class Set>
ComponentPartition t_tight_components(const basic_hypergraph<Set>& h, int t) {
  detail::check_tightness(t, h.k());
  const auto edges = h.edges();
  if (edges.size() > std::numeric_limits<std::uint32_t>::max())
    throw std::length_error("t_tight_components: too many edges");
  UnionFind uf(edges.size());
  std::unordered_map<Set, std::uint32_t, typename set_traits<Set>::hash> bucket;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    set_traits<Set>::for_each_subset(edges[i], t, [&](const Set& sub) {
      auto [it, fresh] = bucket.try_emplace(sub, idx);
      if (!fresh) uf.unite(it->second, idx);
    });
  }
  return ComponentPartition{t, detail::group_by_root(edges, uf)};
}

// E^{(s)} of an edge family, every edge of which must have at least s vertices.
template <class Set>
basic_shadow_set<Set> shadow(std::span<const Set> edges, int s) {
  if (s < 1) throw std::invalid_argument("shadow: s must be >= 1");
  std::unordered_set<Set, typename set_traits<Set>::hash> seen;
  basic_shadow_set<Set> out{s, {}};
  for (const auto& e : edges) {
    if (set_traits<Set>::size(e) < s)
      throw std::invalid_argument("shadow: s exceeds the edge size");
    set_traits<Set>::for_each_subset(e, s, [&](const Set& sub) {
      if (seen.insert(sub).second) out.members.push_back(sub);
    });
  }
  std::sort(out.members.begin(), out.members.end(), set_traits<Set>::colex_less);
  return out;
}

template <class Set>
basic_shadow_set<Set> shadow(const basic_hypergraph<Set>& h, int s) {
  if (s > h.k()) throw std::invalid_argument("shadow: s must be <= k");
  return shadow(h.edges(), s);
}

template <class Set>
std::vector<Set> component_edges(const basic_hypergraph<Set>& h, std::span<const std::size_t> component) {
  std::vector<Set> out;
  out.reserve(component.size());
  for (auto i : component) out.push_back(h.edge(i));
  return out;
}

// Size of the s-shadow of a component without materializing the member list.
template <class Set>
std::size_t component_shadow_count(const basic_hypergraph<Set>& h, std::span<const std::size_t> component,
                                   int s) {
  std::unordered_set<Set, typename set_traits<Set>::hash> seen;
  for (auto i : component) set_traits<Set>::for_each_subset(h.edge(i), s, [&](const Set& sub) { seen.insert(sub); });
  return seen.size();
}

struct LargestComponent {
  std::size_t shadow_count = 0;
  std::size_t component = 0;  // index into the partition; meaningless when the hypergraph is empty
};

// max_{C in TC_t(H)} |E^{(s)}(C)|, first component wins ties. Empty H gives 0.
template <class Set>
LargestComponent largest_component_shadow(const basic_hypergraph<Set>& h, int t, int s) {
  if (s < 1 || s > h.k()) throw std::invalid_argument("s must be in [1, k]");
  const auto partition = t_tight_components(h, t);
  LargestComponent best;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const auto count = component_shadow_count(h, std::span<const std::size_t>(partition.components[c]), s);
    if (count > best.shadow_count) best = {count, c};
  }
  return best;
}

}  // namespace hypercolor
