#pragma once

// Text formats. Lines starting with '#' and blank lines are ignored.
//
//   hypergraph: "n k", then one edge per line as k space-separated 1-based vertices
//   coloring:   "n k r", then C(n,k) lines "color" in colex edge order (compact)
//               or "v1 ... vk color" lines in any order (explicit)
//   design:     "n h k", then one block per line

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypercolor/coloring.hpp"
#include "hypercolor/designs.hpp"
#include "hypercolor/hypergraph.hpp"

namespace hypercolor {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::int64_t> values;
};

inline std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    Line line{number, {}};
    std::string_view rest(text);
    rest.remove_prefix(first);
    while (!rest.empty()) {
      const auto end = rest.find_first_of(" \t\r");
      const auto token = rest.substr(0, end);
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(number, "expected an integer, got '" + std::string(token) + "'");
      line.values.push_back(v);
      if (end == std::string_view::npos) break;
      rest.remove_prefix(end);
      const auto next = rest.find_first_not_of(" \t\r");
      if (next == std::string_view::npos) break;
      rest.remove_prefix(next);
    }
    out.push_back(std::move(line));
  }
  return out;
}

inline const Line& header(const std::vector<Line>& lines, std::size_t fields, const char* layout) {
  if (lines.empty()) throw ParseError(1, std::string("missing header \"") + layout + "\"");
  if (lines.front().values.size() != fields)
    throw ParseError(lines.front().number, std::string("header must be \"") + layout + "\"");
  return lines.front();
}

// 1-based vertices -> sorted 0-based, rejecting repeats and out-of-range values.
inline std::vector<int> vertex_list(const Line& line, std::size_t count, std::int64_t n, const char* what) {
  if (line.values.size() < count)
    throw ParseError(line.number, std::string(what) + " needs " + std::to_string(count) + " vertices");
  std::vector<int> v;
  for (std::size_t i = 0; i < count; ++i) {
    const auto x = line.values[i];
    if (x < 1 || x > n) throw ParseError(line.number, "vertex " + std::to_string(x) + " outside {1.." + std::to_string(n) + "}");
    v.push_back(static_cast<int>(x - 1));
  }
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw ParseError(line.number, "repeated vertex");
  return v;
}

}  // namespace detail

struct RawHypergraph {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> edges;  // sorted 0-based vertices
};

inline RawHypergraph read_hypergraph(std::istream& in) {
  const auto lines = detail::read_lines(in);
  const auto& head = detail::header(lines, 2, "n k");
  RawHypergraph raw{static_cast<int>(head.values[0]), static_cast<int>(head.values[1]), {}};
  if (raw.n < 1 || raw.k < 1 || raw.k > raw.n) throw ParseError(head.number, "need 1 <= k <= n");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].values.size() != static_cast<std::size_t>(raw.k))
      throw ParseError(lines[i].number, "edge must list exactly k=" + std::to_string(raw.k) + " vertices");
    raw.edges.push_back(detail::vertex_list(lines[i], raw.k, raw.n, "edge"));
  }
  return raw;
}

template <class Set>
basic_hypergraph<Set> to_hypergraph(const RawHypergraph& raw) {
  basic_hypergraph<Set> h(raw.n, raw.k);
  for (const auto& e : raw.edges) h.add_edge(e);
  return h;
}

template <class Set>
void write_hypergraph(std::ostream& out, const basic_hypergraph<Set>& h) {
  out << h.n() << ' ' << h.k() << '\n';
  for (const auto& e : h.edges()) {
    const auto v = set_traits<Set>::vertices(e);
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i] + 1;
    out << '\n';
  }
}

inline Coloring read_coloring(std::istream& in) {
  const auto lines = detail::read_lines(in);
  const auto& head = detail::header(lines, 3, "n k r");
  const auto n = head.values[0], k = head.values[1], r = head.values[2];
  if (n < 1 || k < 1 || k > n || k > kMaskVertices) throw ParseError(head.number, "need 1 <= k <= n and k <= 64");
  if (r < 1 || r > kMaxColors) throw ParseError(head.number, "r must be in [1, 255]");
  const auto edges = binom(n, k);
  if (edges > std::numeric_limits<std::uint32_t>::max()) throw ParseError(head.number, "C(n,k) is too large");
  std::vector<Color> colors(edges, 0);
  const auto color_value = [&](const detail::Line& line, std::int64_t c) {
    if (c < 1 || c > r) throw ParseError(line.number, "color " + std::to_string(c) + " outside [1, " + std::to_string(r) + "]");
    return static_cast<Color>(c);
  };
  const std::size_t body = lines.size() - 1;
  if (body > 0 && lines[1].values.size() == 1) {
    if (body != edges)
      throw ParseError(lines.back().number, "compact coloring needs " + std::to_string(edges) + " color lines, found " +
                                                std::to_string(body));
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].values.size() != 1) throw ParseError(lines[i].number, "compact line must hold a single color");
      colors[i - 1] = color_value(lines[i], lines[i].values[0]);
    }
  } else {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto& line = lines[i];
      if (line.values.size() != static_cast<std::size_t>(k + 1))
        throw ParseError(line.number, "explicit line must be \"v1 ... vk color\"");
      const auto v = detail::vertex_list(line, static_cast<std::size_t>(k), n, "edge");
      const auto rank = colex_rank(v);
      if (colors[rank] != 0) throw ParseError(line.number, "edge colored twice");
      colors[rank] = color_value(line, line.values[k]);
    }
    const auto missing = std::find(colors.begin(), colors.end(), Color{0});
    if (missing != colors.end()) {
      std::string set;
      for (int v : colex_unrank_vertices(static_cast<Rank>(missing - colors.begin()), static_cast<int>(n), static_cast<int>(k)))
        set += (set.empty() ? "" : " ") + std::to_string(v + 1);
      throw ParseError(lines.empty() ? 1 : lines.back().number, "edge {" + set + "} has no color");
    }
  }
  return Coloring(static_cast<int>(n), static_cast<int>(k), static_cast<int>(r), std::move(colors));
}

inline void write_coloring(std::ostream& out, const Coloring& c) {
  out << c.n() << ' ' << c.k() << ' ' << c.r() << '\n';
  for (auto color : c.colors()) out << int{color} << '\n';
}

inline SteinerSystem read_design(std::istream& in) {
  const auto lines = detail::read_lines(in);
  const auto& head = detail::header(lines, 3, "n h k");
  SteinerSystem f{static_cast<int>(head.values[0]), static_cast<int>(head.values[1]), static_cast<int>(head.values[2]),
                  {}, {}};
  if (f.n < 1 || f.n > kMaskVertices) throw ParseError(head.number, "n must be in [1, 64]");
  if (f.h < 1 || f.h > f.n || f.k < 1 || f.k > f.h) throw ParseError(head.number, "need 1 <= k <= h <= n");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].values.size() != static_cast<std::size_t>(f.h))
      throw ParseError(lines[i].number, "block must list exactly h=" + std::to_string(f.h) + " points");
    const auto v = detail::vertex_list(lines[i], f.h, f.n, "block");
    Mask m = 0;
    for (int x : v) m |= Mask{1} << x;
    f.blocks.push_back(m);
  }
  return f;
}

inline void write_design(std::ostream& out, const SteinerSystem& f) {
  out << f.n << ' ' << f.h << ' ' << f.k << '\n';
  for (Mask b : f.blocks) {
    bool first = true;
    for (Mask m = b; m != 0; m &= m - 1, first = false) out << (first ? "" : " ") << std::countr_zero(m) + 1;
    out << '\n';
  }
}

template <class T, class Writer>
std::string to_text(const T& value, Writer&& write) {
  std::ostringstream os;
  write(os, value);
  return os.str();
}

}  // namespace hypercolor
