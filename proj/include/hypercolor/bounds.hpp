#pragma once

// Closed-form bounds on M(n,r,k,t,s), real binomials and the root solvers
// behind the two-color constants.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypercolor {

inline constexpr double kRootTolerance = 1e-12;

// (x)(x-1)...(x-s+1)/s!, taken verbatim for real x.
inline double binom_real(double x, int s) {
  if (s < 0) throw std::invalid_argument("binom_real: s must be non-negative");
  double acc = 1.0;
  for (int i = 0; i < s; ++i) acc *= (x - i) / (i + 1);
  return acc;
}

// Plain bisection on [lo, hi]; f(lo) and f(hi) must have opposite signs.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  if ((flo < 0) == (f(hi) < 0)) throw std::invalid_argument("bisect: root not bracketed");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// The x >= k with binom_real(x, k) = m.
inline double kk_root(double m, int k) {
  if (k < 1) throw std::invalid_argument("kk_root: k must be >= 1");
  if (!(m >= 1.0)) throw std::invalid_argument("kk_root: m must be >= 1");
  if (m == 1.0) return k;
  double lo = k;
  double hi = 2.0 * k;
  while (binom_real(hi, k) < m) {
    lo = hi;
    hi *= 2.0;
  }
  return bisect([&](double x) { return binom_real(x, k) - m; }, lo, hi, kRootTolerance);
}

// Lovász's Kruskal–Katona: a k-graph with m = C(x,k) edges has >= C(x,s) s-sets in its shadow.
inline double kk_shadow_bound(std::uint64_t m, int k, int s) {
  if (k < 1 || s < 1 || s > k) throw std::invalid_argument("kk_shadow_bound: need 1 <= s <= k");
  if (m < 1) throw std::invalid_argument("kk_shadow_bound: m must be >= 1");
  return binom_real(kk_root(static_cast<double>(m), k), s);
}

namespace detail {

inline void check_bound_params(std::int64_t n, int k, int t, int s) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (t < 1 || s < 1 || std::max(t + 1, s) > k)
    throw std::invalid_argument("parameters must satisfy t >= 1, s >= 1 and max(t+1, s) <= k");
}

}  // namespace detail

// r^{-s/(k-t)} C(n,s).
inline double general_lower_bound(std::int64_t n, int r, int k, int t, int s) {
  detail::check_bound_params(n, k, t, s);
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  return std::pow(static_cast<double>(r), -static_cast<double>(s) / (k - t)) * binom_real(static_cast<double>(n), s);
}

// delta^{s/(k-t)} C(n,s): some t-tight component of a graph with density delta reaches it.
inline double density_component_bound(std::int64_t n, int k, int t, int s, double delta) {
  detail::check_bound_params(n, k, t, s);
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must be in [0, 1]");
  return std::pow(delta, static_cast<double>(s) / (k - t)) * binom_real(static_cast<double>(n), s);
}

// (1+eps) r^{-s/(k-t)} C(n,s).
inline double asymptotic_upper_bound(std::int64_t n, int r, int k, int t, int s, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  return (1.0 + eps) * general_lower_bound(n, r, k, t, s);
}

struct FurediGyarfas {
  std::int64_t q = 0;
  double value = 0.0;
};

// Smallest q with r <= q^{k-1} + ... + q + 1, and the vertex bound n/q.
inline FurediGyarfas fg_vertex_bound(std::int64_t n, int r, int k) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (std::int64_t q = 1;; ++q) {
    double sum = 0.0;
    double power = 1.0;
    for (int i = 0; i < k; ++i, power *= static_cast<double>(q)) sum += power;
    if (static_cast<double>(r) <= sum) return {q, static_cast<double>(n) / static_cast<double>(q)};
  }
}

// Graph-case reference values: Gyárfás n/(r-1) vertices, Luo C(n,2)/(r^2-r+5/4) edges.
struct ReferenceBounds {
  double gyarfas_vertices = 0.0;
  double luo_edges = 0.0;
};

inline ReferenceBounds reference_bounds(std::int64_t n, int r) {
  if (r < 2) throw std::invalid_argument("reference_bounds: r must be >= 2");
  if (n < 1) throw std::invalid_argument("n must be positive");
  const double rr = r;
  return {static_cast<double>(n) / (rr - 1.0), binom_real(static_cast<double>(n), 2) / (rr * rr - rr + 1.25)};
}

enum class BoundKind { general_lower, density_lower, kk_shadow, fg_vertex, asymptotic_upper, reference };

inline std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::general_lower: return "general_lower";
    case BoundKind::density_lower: return "density_lower";
    case BoundKind::kk_shadow: return "kk_shadow";
    case BoundKind::fg_vertex: return "fg_vertex";
    case BoundKind::asymptotic_upper: return "asymptotic_upper";
    case BoundKind::reference: return "reference";
  }
  return "unknown";
}

inline std::optional<BoundKind> parse_bound_kind(std::string_view name) noexcept {
  for (auto kind : {BoundKind::general_lower, BoundKind::density_lower, BoundKind::kk_shadow, BoundKind::fg_vertex,
                    BoundKind::asymptotic_upper, BoundKind::reference})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

struct BoundParams {
  std::optional<std::int64_t> n, r, k, t, s, m;
  std::optional<double> eps, delta;
};

struct BoundReport {
  BoundKind kind = BoundKind::general_lower;
  std::vector<std::pair<std::string, double>> params;  // the ones the kind used, in a fixed order
  double value = 0.0;
  std::vector<std::pair<std::string, double>> extra;  // secondary outputs (q, Luo value)
};

// Evaluates kind on the parameters it requires; missing ones throw.
inline BoundReport evaluate_bound(BoundKind kind, const BoundParams& p) {
  BoundReport report;
  report.kind = kind;
  const auto need = [&](const std::optional<std::int64_t>& v, const char* name) -> std::int64_t {
    if (!v) throw std::invalid_argument(std::string(to_string(kind)) + " requires --" + name);
    report.params.emplace_back(name, static_cast<double>(*v));
    return *v;
  };
  const auto need_real = [&](const std::optional<double>& v, const char* name) -> double {
    if (!v) throw std::invalid_argument(std::string(to_string(kind)) + " requires --" + name);
    report.params.emplace_back(name, *v);
    return *v;
  };
  const auto as_int = [](std::int64_t v) { return static_cast<int>(v); };
  switch (kind) {
    case BoundKind::general_lower: {
      const auto n = need(p.n, "n"), r = need(p.r, "r"), k = need(p.k, "k"), t = need(p.t, "t"), s = need(p.s, "s");
      report.value = general_lower_bound(n, as_int(r), as_int(k), as_int(t), as_int(s));
      break;
    }
    case BoundKind::density_lower: {
      const auto n = need(p.n, "n"), k = need(p.k, "k"), t = need(p.t, "t"), s = need(p.s, "s");
      const auto delta = need_real(p.delta, "delta");
      report.value = density_component_bound(n, as_int(k), as_int(t), as_int(s), delta);
      break;
    }
    case BoundKind::kk_shadow: {
      const auto m = need(p.m, "m"), k = need(p.k, "k"), s = need(p.s, "s");
      if (m < 1) throw std::invalid_argument("kk_shadow: m must be >= 1");
      report.value = kk_shadow_bound(static_cast<std::uint64_t>(m), as_int(k), as_int(s));
      break;
    }
    case BoundKind::fg_vertex: {
      const auto n = need(p.n, "n"), r = need(p.r, "r"), k = need(p.k, "k");
      const auto fg = fg_vertex_bound(n, as_int(r), as_int(k));
      report.value = fg.value;
      report.extra.emplace_back("q", static_cast<double>(fg.q));
      break;
    }
    case BoundKind::asymptotic_upper: {
      const auto n = need(p.n, "n"), r = need(p.r, "r"), k = need(p.k, "k"), t = need(p.t, "t"), s = need(p.s, "s");
      const auto eps = need_real(p.eps, "eps");
      report.value = asymptotic_upper_bound(n, as_int(r), as_int(k), as_int(t), as_int(s), eps);
      break;
    }
    case BoundKind::reference: {
      const auto n = need(p.n, "n"), r = need(p.r, "r");
      const auto ref = reference_bounds(n, as_int(r));
      report.value = ref.gyarfas_vertices;
      report.extra.emplace_back("luo_edges", ref.luo_edges);
      break;
    }
  }
  return report;
}

// f(x,y) = max(y^3 x^3, (1-y) x^3, (1-(1-x)^3-y x^3)/2), the two-color (2,3) objective.
inline double objective_2323(double x, double y) noexcept {
  const double x3 = x * x * x;
  const double a = y * y * y * x3;
  const double b = (1.0 - y) * x3;
  const double c = (1.0 - (1.0 - x) * (1.0 - x) * (1.0 - x) - y * x3) / 2.0;
  return std::max({a, b, c});
}

struct MinMaxResult {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;        // f(x, y): an upper bound on the box minimum
  double grid_value = 0.0;   // best grid point before refinement
  double lower_bound = 0.0;  // grid minimum minus Lipschitz slack
  double grid_step = 0.0;
};

// Sum of the partial-derivative bounds of every term on the box.
inline constexpr double kObjectiveLipschitz = 6.0;

namespace detail {

template <class F>
double golden_section(F&& f, double lo, double hi, int iters) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = hi - kInvPhi * (hi - lo);
  double b = lo + kInvPhi * (hi - lo);
  double fa = f(a);
  double fb = f(b);
  for (int i = 0; i < iters; ++i) {
    if (fa <= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - kInvPhi * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + kInvPhi * (hi - lo);
      fb = f(b);
    }
  }
  return fa <= fb ? a : b;
}

}  // namespace detail

// Exhaustive grid over x in [0.5,1], y in [0,1], then golden-section
// refinement: in y for fixed x (f is unimodal in y), nested inside a
// golden-section search in x around the best grid column.
inline MinMaxResult optimize_2323(double grid_step, int refine_iters) {
  if (!(grid_step > 0.0 && grid_step <= 0.1)) throw std::invalid_argument("grid_step must be in (0, 0.1]");
  if (refine_iters < 0) throw std::invalid_argument("refine_iters must be >= 0");
  const auto nx = static_cast<int>(std::ceil(0.5 / grid_step - 1e-9));
  const auto ny = static_cast<int>(std::ceil(1.0 / grid_step - 1e-9));
  MinMaxResult res;
  res.grid_step = grid_step;
  res.grid_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= nx; ++i) {
    const double x = std::min(1.0, 0.5 + i * grid_step);
    for (int j = 0; j <= ny; ++j) {
      const double y = std::min(1.0, j * grid_step);
      const double v = objective_2323(x, y);
      if (v < res.grid_value) {
        res.grid_value = v;
        res.x = x;
        res.y = y;
      }
    }
  }
  // Every box point lies within grid_step/2 (sup norm) of a grid point.
  res.lower_bound = res.grid_value - kObjectiveLipschitz * grid_step / 2.0;
  res.value = res.grid_value;
  if (refine_iters == 0) return res;

  const auto best_y = [&](double x) {
    return detail::golden_section([&](double y) { return objective_2323(x, y); }, 0.0, 1.0, refine_iters);
  };
  const double xlo = std::max(0.5, res.x - grid_step);
  const double xhi = std::min(1.0, res.x + grid_step);
  const double x = detail::golden_section([&](double xx) { return objective_2323(xx, best_y(xx)); }, xlo, xhi,
                                          refine_iters);
  const double y = best_y(x);
  const double v = objective_2323(x, y);
  if (v < res.value) {
    res.x = x;
    res.y = y;
    res.value = v;
  }
  return res;
}

// (sqrt21 - 3)/2, the clique fraction of the two-clique coloring.
inline double two_clique_fraction() noexcept { return (std::sqrt(21.0) - 3.0) / 2.0; }

struct SpecialConstants {
  double x0 = 0.0;          // (sqrt21 - 3)/2
  double x0_root = 0.0;     // root of 2x^3 + (1-x)^3 = 1 on (1/2, 1)
  double lambda_2313 = 0.0; // 6 sqrt21 - 27
  double z_root = 0.0;      // real root of (1-z)^3 - z
  MinMaxResult minmax_2323;
  std::int64_t lambda_target_2323_num = 3;
  std::int64_t lambda_target_2323_den = 8;
};

inline SpecialConstants special_constants(double grid_step = 0.01, int refine_iters = 100) {
  SpecialConstants c;
  c.x0 = two_clique_fraction();
  c.x0_root = bisect([](double x) { return 2 * x * x * x + (1 - x) * (1 - x) * (1 - x) - 1; }, 0.5, 1.0, 1e-14);
  c.lambda_2313 = 6.0 * std::sqrt(21.0) - 27.0;
  c.z_root = bisect([](double z) { return (1 - z) * (1 - z) * (1 - z) - z; }, 0.0, 1.0, 1e-14);
  c.minmax_2323 = optimize_2323(grid_step, refine_iters);
  return c;
}

}  // namespace hypercolor
