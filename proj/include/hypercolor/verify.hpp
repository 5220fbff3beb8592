#pragma once

// Seeded property suites: each draws random instances and counts violations
// of one bound that must hold for every instance.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypercolor/bounds.hpp"
#include "hypercolor/coloring.hpp"
#include "hypercolor/constructions.hpp"
#include "hypercolor/hypergraph.hpp"
#include "hypercolor/search.hpp"

namespace hypercolor {

inline constexpr double kBoundSlack = 1e-9;

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string first_violation;  // empty when none

  bool passed() const noexcept { return violations == 0; }

  void fail(std::string what) {
    ++violations;
    if (first_violation.empty()) first_violation = std::move(what);
  }
};

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Each k-subset included independently with a random density; never empty.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int k) {
  const auto edges = checked_binom(n, k);
  const auto keep_per_mille = uniform_int(rng, 1, 1000);
  Hypergraph h(n, k);
  for (Rank e = 0; e < edges; ++e)
    if (uniform_int(rng, 1, 1000) <= keep_per_mille) h.add_edge(colex_unrank(e, n, k));
  if (h.empty()) h.add_edge(colex_unrank(uniform_below(rng, edges), n, k));
  return h;
}

namespace detail {

inline std::string describe(int n, int r, int k, int t, int s) {
  return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k) + " t=" + std::to_string(t) +
         " s=" + std::to_string(s);
}

}  // namespace detail

// measure(c,t,s) >= r^{-s/(k-t)} C(n,s) over random colorings with
// k in {3,4}, k+1 <= n <= max_n, 1 <= r <= max_r and every valid (t,s).
inline SuiteReport lower_bound_suite(std::uint64_t trials, std::uint64_t seed, int max_n = 12, int max_r = 4) {
  SuiteReport rep{"lowerbound", seed, trials, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const int k = uniform_int(rng, 3, 4);
    const int n = uniform_int(rng, k + 1, max_n);
    const int r = uniform_int(rng, 1, max_r);
    const auto c = random_coloring(n, r, k, rng());
    for (int t = 1; t < k; ++t)
      for (int s = 1; s <= k; ++s) {
        ++rep.checks;
        const auto got = measure(c, t, s).value;
        const auto bound = general_lower_bound(n, r, k, t, s);
        if (static_cast<double>(got) < bound - kBoundSlack)
          rep.fail(detail::describe(n, r, k, t, s) + ": measure " + std::to_string(got) + " < " + std::to_string(bound));
      }
  }
  return rep;
}

// |E^{(s)}(G)| >= C(x,s) where |G| = C(x,k), for random 3- and 4-graphs.
inline SuiteReport kk_suite(std::uint64_t trials, std::uint64_t seed, int max_n = 10) {
  SuiteReport rep{"kk", seed, trials, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const int k = uniform_int(rng, 3, 4);
    const int n = uniform_int(rng, k, max_n);
    const auto g = random_hypergraph(rng, n, k);
    for (int s = 1; s <= k; ++s) {
      ++rep.checks;
      const auto got = shadow(g, s).count();
      const auto bound = kk_shadow_bound(g.size(), k, s);
      if (static_cast<double>(got) < bound - kBoundSlack)
        rep.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " |G|=" + std::to_string(g.size()) +
                 " s=" + std::to_string(s) + ": shadow " + std::to_string(got) + " < " + std::to_string(bound));
    }
  }
  return rep;
}

// Some single t-tight component C of G has |E^{(s)}(C)| >= delta^{s/(k-t)} C(n,s)
// for every s <= k simultaneously, delta = |G|/C(n,k).
inline SuiteReport density_suite(std::uint64_t trials, std::uint64_t seed, int max_n = 10) {
  SuiteReport rep{"density", seed, trials, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const int k = uniform_int(rng, 3, 4);
    const int n = uniform_int(rng, k + 1, max_n);
    const int t = uniform_int(rng, 1, k - 1);
    const auto g = random_hypergraph(rng, n, k);
    const double delta = static_cast<double>(g.size()) / static_cast<double>(binom(n, k));
    const auto parts = t_tight_components(g, t);
    ++rep.checks;
    const bool witnessed = std::any_of(parts.components.begin(), parts.components.end(), [&](const auto& comp) {
      for (int s = 1; s <= k; ++s)
        if (static_cast<double>(component_shadow_count(g, std::span<const std::size_t>(comp), s)) <
            density_component_bound(n, k, t, s, delta) - kBoundSlack)
          return false;
      return true;
    });
    if (!witnessed)
      rep.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " t=" + std::to_string(t) + " |G|=" +
               std::to_string(g.size()) + ": no component meets every s-bound");
  }
  return rep;
}

struct BlowUpSuiteOptions {
  int n0 = 6;
  int k = 3;
  std::vector<int> targets{15, 21};
  std::uint64_t pairs = 10'000;
};

// For random base colorings on n0 vertices (r in {2,3}) blown up to each
// target n: |e & f| <= |phi(I_e) & phi(I_f)| on random edge pairs, and the
// measured blow-up obeys the recursive shadow bound for (t,s) in
// {(1,2),(1,3),(2,3)}.
inline SuiteReport blowup_suite(std::uint64_t trials, std::uint64_t seed, const BlowUpSuiteOptions& opt = {}) {
  SuiteReport rep{"blowup", seed, trials, 0, 0, {}};
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<int, int>> ts{{1, 2}, {1, 3}, {2, 3}};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const int r = uniform_int(rng, 2, 3);
    const auto c0 = random_coloring(opt.n0, r, opt.k, rng());
    for (int n : opt.targets) {
      const BlowUpMap map(opt.n0, opt.k, n);
      const auto edges = checked_binom(n, opt.k);
      for (std::uint64_t p = 0; p < opt.pairs; ++p) {
        const auto e = colex_unrank_vertices(uniform_below(rng, edges), n, opt.k);
        const auto f = colex_unrank_vertices(uniform_below(rng, edges), n, opt.k);
        const auto pe = map.phi(map.index_set(e));
        const auto pf = map.phi(map.index_set(f));
        std::vector<int> ef, pef;
        std::set_intersection(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(ef));
        std::set_intersection(pe.begin(), pe.end(), pf.begin(), pf.end(), std::back_inserter(pef));
        ++rep.checks;
        if (ef.size() > pef.size()) rep.fail("n=" + std::to_string(n) + ": |e&f| exceeds |phi(I_e)&phi(I_f)|");
      }
      const auto c = blow_up(c0, n);
      for (auto [t, s] : ts) {
        ++rep.checks;
        const auto got = measure(c, t, s).value;
        const auto bound = blowup_upper_bound(c0, n, t, s);
        if (static_cast<double>(got) > bound + kBoundSlack)
          rep.fail(detail::describe(n, r, opt.k, t, s) + ": blow-up measure " + std::to_string(got) + " > " +
                   std::to_string(bound));
      }
    }
  }
  return rep;
}

}  // namespace hypercolor
