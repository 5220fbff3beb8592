#pragma once

// Command-line front end. run_cli() returns the process exit code:
// 0 success, 1 a verification failed, 2 invalid input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercolor/hypercolor.hpp"

namespace hypercolor::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json report;
  int exit_code = kExitOk;
  bool print_report = true;
};

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

template <class Set>
Json edge_json(const Set& e) {
  Json arr = Json::array();
  for (int v : set_traits<Set>::vertices(e)) arr.push_back(v + 1);
  return arr;
}

inline Json rank_json(Rank r, int n, int k) {
  Json arr = Json::array();
  for (int v : colex_unrank_vertices(r, n, k)) arr.push_back(v + 1);
  return arr;
}

template <class Set>
Json components_report(const basic_hypergraph<Set>& h, int t) {
  const auto parts = t_tight_components(h, t);
  Json comps = Json::array();
  for (const auto& c : parts.components) {
    Json edges = Json::array();
    for (auto i : c) edges.push_back(edge_json(h.edge(i)));
    comps.push_back({{"size", c.size()}, {"edges", edges}});
  }
  return {{"count", parts.size()}, {"components", comps}};
}

template <class Set>
Json shadow_report(const basic_hypergraph<Set>& h, int s) {
  const auto sh = shadow(h, s);
  Json members = Json::array();
  for (const auto& m : sh.members) members.push_back(edge_json(m));
  return {{"count", sh.count()}, {"members", members}};
}

inline SteinerSystem load_design(const std::string& name, int q, const std::string& file) {
  if (!file.empty()) {
    auto in = open_input(file);
    return read_design(in);
  }
  if (name == "affine") return affine_plane(q);
  return builtin_design(name);
}

inline std::vector<std::vector<std::size_t>> design_classes(const SteinerSystem& f, int t, const std::string& order) {
  if (order == "tagged") return tagged_classes(f);
  const auto parsed = parse_block_order(order);
  if (!parsed) throw UsageError("unknown block order '" + order + "'");
  return partition_blocks(f, t, *parsed).classes;
}

// Integral parameters print without a fractional part.
inline Json number_json(const std::string& key, double v) {
  if (key != "eps" && key != "delta" && v == static_cast<double>(static_cast<std::int64_t>(v)))
    return static_cast<std::int64_t>(v);
  return v;
}

inline Json suite_json(const SuiteReport& r) {
  Json j = {{"suite", r.name}, {"seed", r.seed},           {"trials", r.trials},
            {"checks", r.checks}, {"violations", r.violations}, {"passed", r.passed()}};
  if (!r.first_violation.empty()) j["first_violation"] = r.first_violation;
  return j;
}

inline void print_human(std::ostream& out, const Json& report) {
  for (const auto& [key, value] : report.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      const auto text = value.dump();
      out << (text.size() > 200 ? text.substr(0, 197) + "..." : text);
    }
    out << '\n';
  }
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic tight components in edge-colored complete hypergraphs", "hypercolor"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as one JSON object")->configurable(false);
  app.fallthrough();

  std::optional<Outcome> outcome;
  const auto run = [&](auto&& body) { return [&outcome, body] { outcome = body(); }; };

  // Shared option storage.
  std::string hypergraph_file, coloring_file, base_file, out_file, design_file, witness_file;
  std::string name, kind, order = "given", suite, mode, design_name;
  std::optional<std::int64_t> opt_n, opt_r, opt_k, opt_t, opt_s, opt_m;
  std::optional<double> opt_eps, opt_delta;
  int q = 3;
  int threads = 1;
  std::uint64_t budget = 1'000'000'000, trials = 100, seed = 1, pairs = 10'000;
  double grid_step = 0.01;
  int refine_iters = 100;
  bool with_witness = false;

  const auto need = [](const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing --") + flag);
    return static_cast<int>(*v);
  };

  auto* components = app.add_subcommand("components", "t-tight components of a hypergraph file");
  components->add_option("--hypergraph", hypergraph_file, "Hypergraph file")->required();
  components->add_option("--t", opt_t, "Tightness")->required();
  components->callback(run([&] {
    auto in = detail::open_input(hypergraph_file);
    const auto raw = read_hypergraph(in);
    const int t = need(opt_t, "t");
    Json rep = {{"command", "components"}, {"params", {{"n", raw.n}, {"k", raw.k}, {"t", t}}}};
    const auto body = raw.n <= kMaskVertices ? detail::components_report(to_hypergraph<Mask>(raw), t)
                                             : detail::components_report(to_hypergraph<VertexList>(raw), t);
    rep.update(body);
    return Outcome{rep};
  }));

  auto* shadow_cmd = app.add_subcommand("shadow", "s-shadow of a hypergraph file");
  shadow_cmd->add_option("--hypergraph", hypergraph_file, "Hypergraph file")->required();
  shadow_cmd->add_option("--s", opt_s, "Shadow level")->required();
  shadow_cmd->callback(run([&] {
    auto in = detail::open_input(hypergraph_file);
    const auto raw = read_hypergraph(in);
    const int s = need(opt_s, "s");
    Json rep = {{"command", "shadow"}, {"params", {{"n", raw.n}, {"k", raw.k}, {"s", s}}}};
    rep.update(raw.n <= kMaskVertices ? detail::shadow_report(to_hypergraph<Mask>(raw), s)
                                      : detail::shadow_report(to_hypergraph<VertexList>(raw), s));
    return Outcome{rep};
  }));

  auto* measure_cmd = app.add_subcommand("measure", "M(n,r,k,t,s;c) of a coloring file");
  measure_cmd->add_option("--coloring", coloring_file, "Coloring file")->required();
  measure_cmd->add_option("--t", opt_t, "Tightness")->required();
  measure_cmd->add_option("--s", opt_s, "Shadow level")->required();
  measure_cmd->add_flag("--witness", with_witness, "List the edges of the witness component");
  measure_cmd->callback(run([&] {
    auto in = detail::open_input(coloring_file);
    const auto c = read_coloring(in);
    const int t = need(opt_t, "t"), s = need(opt_s, "s");
    const auto m = measure(c, t, s);
    Json rep = {{"command", "measure"},
                {"params", {{"n", c.n()}, {"r", c.r()}, {"k", c.k()}, {"t", t}, {"s", s}}},
                {"value", m.value},
                {"witness_color", m.witness_color},
                {"witness_component_size", m.witness_component.size()},
                {"lower_bound", general_lower_bound(c.n(), c.r(), c.k(), t, s)}};
    if (!m.witness_component.empty()) rep["witness_first_edge"] = detail::rank_json(m.witness_component.front(), c.n(), c.k());
    if (with_witness) {
      Json edges = Json::array();
      for (auto e : m.witness_component) edges.push_back(detail::rank_json(e, c.n(), c.k()));
      rep["witness_edges"] = edges;
    }
    return Outcome{rep};
  }));

  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a closed-form bound");
  bound_cmd->add_option("kind", kind, "general_lower | density_lower | kk_shadow | fg_vertex | asymptotic_upper | reference")
      ->required();
  bound_cmd->add_option("--n", opt_n);
  bound_cmd->add_option("--r", opt_r);
  bound_cmd->add_option("--k", opt_k);
  bound_cmd->add_option("--t", opt_t);
  bound_cmd->add_option("--s", opt_s);
  bound_cmd->add_option("--m", opt_m, "Edge count (kk_shadow)");
  bound_cmd->add_option("--eps", opt_eps);
  bound_cmd->add_option("--delta", opt_delta);
  bound_cmd->callback(run([&] {
    const auto parsed = parse_bound_kind(kind);
    if (!parsed) throw UsageError("unknown bound kind '" + kind + "'");
    const auto report = evaluate_bound(*parsed, BoundParams{opt_n, opt_r, opt_k, opt_t, opt_s, opt_m, opt_eps, opt_delta});
    Json params = Json::object();
    for (const auto& [key, v] : report.params) params[key] = detail::number_json(key, v);
    Json rep = {{"command", "bound"}, {"kind", std::string(to_string(report.kind))}, {"params", params}, {"value", report.value}};
    for (const auto& [key, v] : report.extra) rep[key] = detail::number_json(key, v);
    return Outcome{rep};
  }));

  auto* constants_cmd = app.add_subcommand("constants", "Two-color constants and the (2,3) min-max");
  constants_cmd->add_option("--grid-step", grid_step, "Grid step for the min-max search");
  constants_cmd->add_option("--refine-iters", refine_iters, "Golden-section iterations");
  constants_cmd->callback(run([&] {
    const auto c = special_constants(grid_step, refine_iters);
    const auto& mm = c.minmax_2323;
    Json rep = {{"command", "constants"},
                {"params", {{"grid_step", grid_step}, {"refine_iters", refine_iters}}},
                {"x0", c.x0},
                {"x0_root", c.x0_root},
                {"lambda_2313", c.lambda_2313},
                {"z_root", c.z_root},
                {"minmax_2323",
                 {{"value", mm.value}, {"x", mm.x}, {"y", mm.y}, {"grid_value", mm.grid_value}, {"lower_bound", mm.lower_bound}}},
                {"lambda_target_2323", std::to_string(c.lambda_target_2323_num) + "/" + std::to_string(c.lambda_target_2323_den)}};
    return Outcome{rep};
  }));

  auto* construct = app.add_subcommand("construct", "Write an explicit coloring");
  construct->add_option("name", name, "all_red | majority | two_clique | parity | steiner | blowup")->required();
  construct->add_option("--n", opt_n);
  construct->add_option("--r", opt_r);
  construct->add_option("--k", opt_k);
  construct->add_option("--base", base_file, "Base coloring (blowup)");
  construct->add_option("--design", design_name, "fano | s348 | ag23 | affine (steiner)");
  construct->add_option("--q", q, "Affine plane order");
  construct->add_option("--design-file", design_file, "Design file (steiner)");
  construct->add_option("--t", opt_t, "Class intersection limit (steiner)");
  construct->add_option("--order", order, "given | complement-paired | tagged (steiner)");
  construct->add_option("--out", out_file, "Output file; stdout when omitted");
  construct->callback(run([&] {
    std::optional<Coloring> c;
    Json extra = Json::object();
    if (name == "all_red") {
      c = all_red(need(opt_n, "n"), need(opt_k, "k"), opt_r ? need(opt_r, "r") : 2);
    } else if (name == "majority") {
      c = majority_coloring(need(opt_n, "n"));
    } else if (name == "two_clique") {
      c = two_clique_coloring(need(opt_n, "n"));
    } else if (name == "parity") {
      c = parity_coloring(need(opt_n, "n"));
    } else if (name == "blowup") {
      if (base_file.empty()) throw UsageError("blowup needs --base");
      auto in = detail::open_input(base_file);
      c = blow_up(read_coloring(in), need(opt_n, "n"));
    } else if (name == "steiner") {
      if (design_name.empty() && design_file.empty()) throw UsageError("steiner needs --design or --design-file");
      const auto f = detail::load_design(design_name, q, design_file);
      const int t = opt_t ? need(opt_t, "t") : 1;
      c = steiner_coloring(f, detail::design_classes(f, t, order), t);
      extra = {{"design_n", f.n}, {"design_h", f.h}, {"design_k", f.k}, {"classes", c->r()}};
    } else {
      throw UsageError("unknown construction '" + name + "'");
    }
    const auto text = to_text(*c, [](std::ostream& os, const Coloring& col) { write_coloring(os, col); });
    if (out_file.empty()) {
      out << text;
      return Outcome{Json::object(), kExitOk, false};
    }
    detail::write_file(out_file, text);
    Json rep = {{"command", "construct"}, {"name", name}, {"n", c->n()}, {"k", c->k()}, {"r", c->r()}, {"out", out_file}};
    rep.update(extra);
    return Outcome{rep};
  }));

  auto* design = app.add_subcommand("design", "Emit, validate or partition a Steiner system");
  design->add_option("action", mode, "emit | validate | partition")->required();
  design->add_option("--name", design_name, "fano | s348 | ag23 | affine");
  design->add_option("--q", q, "Affine plane order");
  design->add_option("--file", design_file, "Design file");
  design->add_option("--t", opt_t, "Intersection limit (partition)");
  design->add_option("--order", order, "given | complement-paired");
  design->add_option("--out", out_file, "Output file (emit)");
  design->callback(run([&] {
    if (design_name.empty() && design_file.empty()) throw UsageError("design needs --name or --file");
    const auto f = detail::load_design(design_name, q, design_file);
    Json rep = {{"command", "design"}, {"action", mode}, {"n", f.n}, {"h", f.h}, {"k", f.k}, {"blocks", f.blocks.size()}};
    if (mode == "emit") {
      const auto text = to_text(f, [](std::ostream& os, const SteinerSystem& d) { write_design(os, d); });
      if (out_file.empty()) {
        out << text;
        return Outcome{Json::object(), kExitOk, false};
      }
      detail::write_file(out_file, text);
      rep["out"] = out_file;
      return Outcome{rep};
    }
    if (mode == "validate") {
      const auto why = steiner_violation(f);
      rep["valid"] = !why.has_value();
      if (why) rep["violation"] = *why;
      return Outcome{rep, why ? kExitFailed : kExitOk};
    }
    if (mode == "partition") {
      const int t = opt_t ? need(opt_t, "t") : 1;
      const auto parsed = parse_block_order(order);
      if (!parsed) throw UsageError("unknown block order '" + order + "'");
      const auto part = partition_blocks(f, t, *parsed);
      Json classes = Json::array();
      for (const auto& cls : part.classes) {
        Json blocks = Json::array();
        for (auto b : cls) blocks.push_back(detail::edge_json(f.blocks[b]));
        classes.push_back(blocks);
      }
      rep.update({{"t", t}, {"order", order}, {"class_count", part.class_count()}, {"lower_bound", part.lower_bound},
                  {"classes", classes}});
      return Outcome{rep};
    }
    throw UsageError("unknown design action '" + mode + "'");
  }));

  auto* blowup = app.add_subcommand("blowup", "Blow a base coloring up to n vertices");
  blowup->add_option("--base", base_file, "Base coloring")->required();
  blowup->add_option("--n", opt_n, "Target vertex count")->required();
  blowup->add_option("--t", opt_t, "Check the shadow bound at this t");
  blowup->add_option("--s", opt_s, "Check the shadow bound at this s");
  blowup->add_option("--out", out_file, "Write the blown-up coloring here");
  blowup->callback(run([&] {
    auto in = detail::open_input(base_file);
    const auto c0 = read_coloring(in);
    const int n = need(opt_n, "n");
    const auto c = blow_up(c0, n);
    const BlowUpMap map(c0.n(), c0.k(), n);
    Json rep = {{"command", "blowup"}, {"n0", c0.n()}, {"n", n}, {"k", c.k()}, {"r", c.r()}, {"parts", map.parts()}};
    int code = kExitOk;
    if (opt_t || opt_s) {
      const int t = need(opt_t, "t"), s = need(opt_s, "s");
      const auto got = measure(c, t, s).value;
      const auto bound = blowup_upper_bound(c0, n, t, s);
      rep.update({{"t", t}, {"s", s}, {"value", got}, {"bound", bound}, {"holds", static_cast<double>(got) <= bound}});
      if (static_cast<double>(got) > bound) code = kExitFailed;
    }
    if (!out_file.empty()) {
      detail::write_file(out_file, to_text(c, [](std::ostream& os, const Coloring& col) { write_coloring(os, col); }));
      rep["out"] = out_file;
    }
    return Outcome{rep, code};
  }));

  auto* search = app.add_subcommand("search", "Exact M(n,r,k,t,s) by branch and bound");
  search->add_option("mode", mode, "exact")->required();
  search->add_option("--n", opt_n)->required();
  search->add_option("--r", opt_r)->required();
  search->add_option("--k", opt_k)->required();
  search->add_option("--t", opt_t)->required();
  search->add_option("--s", opt_s)->required();
  search->add_option("--budget", budget, "Node limit");
  search->add_option("--threads", threads, "Worker threads");
  search->add_option("--emit-witness", witness_file, "Write the witness coloring here");
  search->callback(run([&] {
    if (mode != "exact") throw UsageError("unknown search mode '" + mode + "'");
    const int n = need(opt_n, "n"), r = need(opt_r, "r"), k = need(opt_k, "k"), t = need(opt_t, "t"), s = need(opt_s, "s");
    const auto res = exact_M(n, r, k, t, s, SearchOptions{budget, threads});
    const auto check = measure(res.witness, t, s).value;
    Json rep = {{"command", "search"},
                {"params", {{"n", n}, {"r", r}, {"k", k}, {"t", t}, {"s", s}, {"budget", budget}, {"threads", threads}}},
                {"value", res.value},
                {"status", to_string(res.status)},
                {"nodes", res.nodes_explored},
                {"seconds", res.wall_time},
                {"lower_bound", res.lower_bound},
                {"incumbent", res.incumbent_source},
                {"witness_verified", check == res.value}};
    if (const auto known = known_value(n, r, k, t, s)) {
      rep["reference_value"] = *known;
    } else {
      rep["reference_value"] = nullptr;
      rep["note"] = "no closed form is known for these parameters; this value is computed data";
    }
    if (!witness_file.empty()) {
      detail::write_file(witness_file, to_text(res.witness, [](std::ostream& os, const Coloring& col) { write_coloring(os, col); }));
      rep["witness"] = witness_file;
    }
    return Outcome{rep, check == res.value ? kExitOk : kExitFailed};
  }));

  auto* verify = app.add_subcommand("verify", "Run a seeded property suite");
  verify->add_option("suite", suite, "kk | density | lowerbound | blowup | r2a")->required();
  verify->add_option("--trials", trials, "Random instances");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--pairs", pairs, "Edge pairs per blow-up (blowup)");
  verify->add_option("--n", opt_n);
  verify->add_option("--k", opt_k);
  verify->add_option("--t", opt_t);
  verify->add_option("--s", opt_s);
  verify->callback(run([&] {
    Json rep = {{"command", "verify"}};
    bool ok = true;
    if (suite == "r2a") {
      const int n = need(opt_n, "n"), k = need(opt_k, "k"), t = need(opt_t, "t"), s = need(opt_s, "s");
      const auto res = verify_r2a(n, k, t, s);
      ok = res.pass;
      rep.update({{"suite", "r2a"}, {"params", {{"n", n}, {"k", k}, {"t", t}, {"s", s}}},
                  {"colorings_checked", res.colorings_checked}, {"passed", res.pass}});
      if (res.counterexample)
        rep["counterexample"] = to_text(*res.counterexample, [](std::ostream& os, const Coloring& col) { write_coloring(os, col); });
    } else {
      SuiteReport r;
      if (suite == "kk") {
        r = kk_suite(trials, seed);
      } else if (suite == "density") {
        r = density_suite(trials, seed);
      } else if (suite == "lowerbound") {
        r = lower_bound_suite(trials, seed);
      } else if (suite == "blowup") {
        BlowUpSuiteOptions opt;
        opt.pairs = pairs;
        r = blowup_suite(trials, seed, opt);
      } else {
        throw UsageError("unknown suite '" + suite + "'");
      }
      ok = r.passed();
      rep.update(detail::suite_json(r));
    }
    return Outcome{rep, ok ? kExitOk : kExitFailed};
  }));

  for (const auto& a : args) {
    if (a.empty() || a[0] == '-') continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "error: unknown subcommand '" << a << "'\n";
      return kExitInvalid;
    }
    break;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  if (!outcome) return kExitInvalid;
  if (outcome->print_report) {
    outcome->report["exit_code"] = outcome->exit_code;
    if (json) {
      out << outcome->report.dump() << '\n';
    } else {
      detail::print_human(out, outcome->report);
    }
  }
  return outcome->exit_code;
}

}  // namespace hypercolor::cli
