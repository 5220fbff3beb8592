#pragma once

// Exact M(n,r,k,t,s) by branch and bound over all r-colorings of K^k_n,
// exhaustive checking of the two-color spanning-shadow theorem, and the
// seeded random colorings used by the property suites.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hypercolor/bounds.hpp"
#include "hypercolor/coloring.hpp"
#include "hypercolor/constructions.hpp"

namespace hypercolor {

// Unbiased integer in [0, bound) from a 64-bit engine (Lemire's method), so
// seeded streams do not depend on the standard library's distributions.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Independent uniform colors; the same seed always gives the same coloring.
inline Coloring random_coloring(int n, int r, int k, std::uint64_t seed) {
  Coloring::check_shape(n, k, r);
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(checked_binom(n, k));
  for (auto& c : colors) c = static_cast<Color>(1 + uniform_below(rng, static_cast<std::uint64_t>(r)));
  return Coloring(n, k, r, std::move(colors));
}

enum class SearchStatus { exact, budget_exhausted };

inline const char* to_string(SearchStatus s) noexcept {
  return s == SearchStatus::exact ? "exact" : "budget-exhausted";
}

struct SearchOptions {
  std::uint64_t budget = 1'000'000'000;  // node limit
  int threads = 1;
};

struct SearchResult {
  std::uint64_t value = 0;  // exact when status is exact, else the best upper bound found
  Coloring witness;
  SearchStatus status = SearchStatus::exact;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0.0;           // seconds
  double lower_bound = 0.0;         // r^{-s/(k-t)} C(n,s)
  std::string incumbent_source;     // construction the search started from
  bool improved_on_incumbent = false;
};

namespace detail {

// Incremental per-color union-find over edge ranks with s-shadow bitsets on
// the roots, undone in LIFO order.
class SearchState {
 public:
  SearchState(int n, int r, int k, int t, int s)
      : r_(r),
        edges_(checked_binom(n, k)),
        tsets_(checked_binom(n, t)),
        tper_(static_cast<int>(binom(k, t))),
        sper_(static_cast<int>(binom(k, s))),
        words_((checked_binom(n, s) + 63) / 64) {
    tsub_.reserve(edges_ * tper_);
    ssub_.reserve(edges_ * sper_);
    for (Rank e = 0; e < edges_; ++e) {
      const auto v = colex_unrank_vertices(e, n, k);
      for_each_subset_rank(v, t, [&](Rank x) { tsub_.push_back(static_cast<std::uint32_t>(x)); });
      for_each_subset_rank(v, s, [&](Rank x) { ssub_.push_back(static_cast<std::uint32_t>(x)); });
    }
    rep_.assign(static_cast<std::size_t>(r + 1) * tsets_, kNone);
    parent_.assign(edges_, 0);
    size_.assign(edges_, 1);
    count_.assign(edges_, 0);
    bits_.assign(edges_ * words_, 0);
    assignment_.assign(edges_, 0);
    max_stack_.push_back(0);
  }

  std::size_t edges() const noexcept { return edges_; }
  std::uint64_t current_max() const noexcept { return max_stack_.back(); }
  const std::vector<Color>& assignment() const noexcept { return assignment_; }

  void apply(std::uint32_t e, Color c) {
    marks_.push_back(log_.size());
    assignment_[e] = c;
    parent_[e] = e;
    size_[e] = 1;
    std::uint64_t* own = &bits_[e * words_];
    std::fill(own, own + words_, 0);
    for (int i = 0; i < sper_; ++i) {
      const auto x = ssub_[e * sper_ + i];
      own[x / 64] |= std::uint64_t{1} << (x % 64);
    }
    count_[e] = static_cast<std::uint32_t>(sper_);
    for (int i = 0; i < tper_; ++i) {
      auto& rep = rep_[c * tsets_ + tsub_[e * tper_ + i]];
      if (rep == kNone) {
        rep = e;
        log_.push_back({Op::rep, static_cast<std::uint32_t>(c * tsets_ + tsub_[e * tper_ + i]), 0, 0});
        continue;
      }
      unite(find(rep), find(e));
    }
    max_stack_.push_back(std::max<std::uint64_t>(max_stack_.back(), count_[find(e)]));
  }

  void undo() {
    const auto mark = marks_.back();
    marks_.pop_back();
    max_stack_.pop_back();
    while (log_.size() > mark) {
      const auto entry = log_.back();
      log_.pop_back();
      if (entry.op == Op::rep) {
        rep_[entry.a] = kNone;
      } else {
        const auto root = entry.a;
        const auto child = entry.b;
        parent_[child] = child;
        size_[root] -= size_[child];
        count_[root] = entry.old_count;
        std::copy(saved_.end() - static_cast<std::ptrdiff_t>(words_), saved_.end(), &bits_[root * words_]);
        saved_.resize(saved_.size() - words_);
      }
    }
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  enum class Op : std::uint8_t { rep, unite };
  struct Entry {
    Op op;
    std::uint32_t a;
    std::uint32_t b;
    std::uint32_t old_count;
  };

  std::uint32_t find(std::uint32_t x) const noexcept {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    std::uint64_t* dst = &bits_[a * words_];
    const std::uint64_t* src = &bits_[b * words_];
    saved_.insert(saved_.end(), dst, dst + words_);
    log_.push_back({Op::unite, a, b, count_[a]});
    std::uint32_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      dst[w] |= src[w];
      total += static_cast<std::uint32_t>(std::popcount(dst[w]));
    }
    parent_[b] = a;
    size_[a] += size_[b];
    count_[a] = total;
  }

  int r_;
  std::size_t edges_;
  std::size_t tsets_;
  int tper_;
  int sper_;
  std::size_t words_;
  std::vector<std::uint32_t> tsub_;
  std::vector<std::uint32_t> ssub_;
  std::vector<std::uint32_t> rep_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> saved_;
  std::vector<Entry> log_;
  std::vector<std::size_t> marks_;
  std::vector<std::uint64_t> max_stack_;
  std::vector<Color> assignment_;
};

struct Incumbent {
  std::uint64_t value;
  Coloring coloring;
  std::string source;
};

inline Incumbent best_construction(int n, int r, int k, int t, int s) {
  Incumbent best{0, all_red(n, k, r), "all_red"};
  best.value = measure(best.coloring, t, s).value;
  if (r == 2 && k == 3 && n >= 3) {
    const auto consider = [&](Coloring c, const char* name) {
      const auto v = measure(c, t, s).value;
      if (v < best.value) best = {v, std::move(c), name};
    };
    consider(majority_coloring(n), "majority");
    consider(parity_coloring(n), "parity");
    consider(two_clique_coloring(n), "two_clique");
  }
  return best;
}

// Shared between workers: incumbent value, its coloring and the node budget.
class SearchShared {
 public:
  SearchShared(Incumbent inc, std::uint64_t budget)
      : best_(inc.value), witness_(inc.coloring.colors().begin(), inc.coloring.colors().end()), budget_(budget) {}

  std::uint64_t best() const noexcept { return best_.load(std::memory_order_relaxed); }

  // False once the budget is spent.
  bool charge() noexcept {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool exhausted() const noexcept { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const noexcept { return std::min(nodes_.load(), budget_); }

  void offer(std::uint64_t value, const std::vector<Color>& colors) {
    std::lock_guard lock(mutex_);
    if (value < best_.load()) {
      best_.store(value);
      witness_ = colors;
      improved_ = true;
    }
  }

  std::vector<Color> witness() const {
    std::lock_guard lock(mutex_);
    return witness_;
  }
  bool improved() const noexcept { return improved_; }

 private:
  std::atomic<std::uint64_t> best_;
  std::vector<Color> witness_;
  mutable std::mutex mutex_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
  bool improved_ = false;
};

// Depth-first over edges in colex order. A color may be used only after all
// smaller ones have appeared, which removes the r! color relabelings. A
// partial coloring whose largest shadow already reaches the incumbent is
// cut: adding edges never shrinks a component or its shadow.
inline void extend(SearchState& st, SearchShared& shared, std::uint32_t i, int used, int r) {
  if (i == st.edges()) {
    shared.offer(st.current_max(), st.assignment());
    return;
  }
  const int top = std::min(r, used + 1);
  for (int c = 1; c <= top; ++c) {
    if (!shared.charge()) return;
    st.apply(i, static_cast<Color>(c));
    if (st.current_max() < shared.best()) extend(st, shared, i + 1, std::max(used, c), r);
    st.undo();
    if (shared.exhausted()) return;
  }
}

struct Prefix {
  std::vector<Color> colors;
  int used;
};

// Canonical, unpruned-so-far prefixes of the given depth.
inline void collect_prefixes(SearchState& st, SearchShared& shared, std::uint32_t i, int used, int r,
                             std::uint32_t depth, std::vector<Color>& path, std::vector<Prefix>& out) {
  if (i == depth) {
    out.push_back({path, used});
    return;
  }
  const int top = std::min(r, used + 1);
  for (int c = 1; c <= top; ++c) {
    if (!shared.charge()) return;
    st.apply(i, static_cast<Color>(c));
    path.push_back(static_cast<Color>(c));
    if (st.current_max() < shared.best()) collect_prefixes(st, shared, i + 1, std::max(used, c), r, depth, path, out);
    path.pop_back();
    st.undo();
  }
}

}  // namespace detail

// Known closed form for M(n,r,k,t,s), if any: one color; the two-color
// spanning case 2 max(t,s) <= k; and the exact values for (r,k) = (2,3).
inline std::optional<std::uint64_t> known_value(int n, int r, int k, int t, int s) {
  if (r == 1) return binom(n, s);
  if (r == 2 && 2 * std::max(t, s) <= k && k <= n) return binom(n, s);
  if (r == 2 && k == 3 && n >= 3) {
    if (s == 1) return static_cast<std::uint64_t>(n);
    if (s == 2) return binom(n, 2) - binom(n / 2, 2);
  }
  return std::nullopt;
}

inline SearchResult exact_M(int n, int r, int k, int t, int s, const SearchOptions& opts = {}) {
  detail::check_measure_params(k, t, s);
  Coloring::check_shape(n, k, r);
  if (opts.threads < 1) throw std::invalid_argument("threads must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  auto incumbent = detail::best_construction(n, r, k, t, s);
  const std::string source = incumbent.source;
  detail::SearchShared shared(std::move(incumbent), opts.budget);

  if (opts.threads == 1) {
    detail::SearchState st(n, r, k, t, s);
    detail::extend(st, shared, 0, 0, r);
  } else {
    // Split at a depth giving a few tasks per worker.
    detail::SearchState root(n, r, k, t, s);
    std::uint32_t depth = 0;
    for (std::uint64_t leaves = 1; depth < root.edges() && leaves < 8ULL * opts.threads; ++depth) leaves *= r;
    std::vector<detail::Prefix> tasks;
    std::vector<Color> path;
    detail::collect_prefixes(root, shared, 0, 0, r, depth, path, tasks);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < opts.threads; ++w)
      pool.emplace_back([&] {
        detail::SearchState st(n, r, k, t, s);
        for (std::size_t job; (job = next.fetch_add(1)) < tasks.size() && !shared.exhausted();) {
          const auto& prefix = tasks[job].colors;
          for (std::uint32_t i = 0; i < prefix.size(); ++i) st.apply(i, prefix[i]);
          if (st.current_max() < shared.best())
            detail::extend(st, shared, static_cast<std::uint32_t>(prefix.size()), tasks[job].used, r);
          for (std::size_t i = 0; i < prefix.size(); ++i) st.undo();
        }
      });
    for (auto& th : pool) th.join();
  }

  SearchResult res{shared.best(), Coloring(n, k, r, shared.witness()), SearchStatus::exact, shared.nodes(), 0.0,
                   general_lower_bound(n, r, k, t, s), source, shared.improved()};
  res.status = shared.exhausted() ? SearchStatus::budget_exhausted : SearchStatus::exact;
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

struct R2aResult {
  bool pass = true;
  std::uint64_t colorings_checked = 0;
  std::optional<Coloring> counterexample;
};

// Every 2-coloring of K^k_n, up to swapping the colors, must have a
// monochromatic t-tight component whose s-shadow is all of C([n], s).
inline R2aResult verify_r2a(int n, int k, int t, int s, std::uint64_t max_colorings = 1ULL << 26) {
  detail::check_measure_params(k, t, s);
  if (k > n) throw std::invalid_argument("verify_r2a: need k <= n");
  if (2 * std::max(t, s) > k) throw std::invalid_argument("verify_r2a: requires 2 max(t,s) <= k");
  const auto edges = checked_binom(n, k);
  if (edges > 63 || (1ULL << (edges - 1)) > max_colorings)
    throw std::invalid_argument("verify_r2a: 2^(C(n,k)-1) colorings exceed the enumeration limit");
  const auto full = binom(n, s);
  const std::uint64_t total = 1ULL << (edges - 1);
  R2aResult out;
  std::vector<Color> colors(edges, kRed);
  for (std::uint64_t code = 0; code < total; ++code) {
    // Edge 0 stays red; edge i > 0 takes bit i-1 of code.
    for (std::size_t i = 1; i < edges; ++i) colors[i] = ((code >> (i - 1)) & 1) ? kBlue : kRed;
    Coloring c(n, k, 2, colors);
    ++out.colorings_checked;
    if (measure(c, t, s).value != full) {
      out.pass = false;
      out.counterexample = std::move(c);
      break;
    }
  }
  return out;
}

}  // namespace hypercolor
