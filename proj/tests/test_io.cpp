#include <gtest/gtest.h>

#include <sstream>

#include "hypercolor/hypercolor.hpp"

using namespace hypercolor;

namespace {

template <class F>
std::size_t error_line(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

Coloring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  return read_coloring(in);
}

RawHypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

SteinerSystem parse_design(const std::string& text) {
  std::istringstream in(text);
  return read_design(in);
}

}  // namespace

TEST(HypergraphFormat, ReadsWithCommentsAndBlanks) {
  const auto raw = parse_hypergraph("# triangle pair\n\n5 3\n1 2 3\n  3 2 4  \n");
  EXPECT_EQ(raw.n, 5);
  EXPECT_EQ(raw.k, 3);
  ASSERT_EQ(raw.edges.size(), 2u);
  EXPECT_EQ(raw.edges[1], (std::vector<int>{1, 2, 3}));
  const auto h = to_hypergraph<Mask>(raw);
  EXPECT_EQ(t_tight_components(h, 2).size(), 1u);
}

TEST(HypergraphFormat, RoundTrip) {
  std::mt19937_64 rng(1);
  const auto h = random_hypergraph(rng, 9, 4);
  std::ostringstream out;
  write_hypergraph(out, h);
  const auto back = to_hypergraph<Mask>(parse_hypergraph(out.str()));
  ASSERT_EQ(back.size(), h.size());
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(back.edge(i), h.edge(i));
  std::ostringstream again;
  write_hypergraph(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST(HypergraphFormat, WideInput) {
  std::string text = "80 2\n";
  for (int v = 1; v < 80; ++v) text += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
  const auto h = to_hypergraph<VertexList>(parse_hypergraph(text));
  EXPECT_EQ(t_tight_components(h, 1).size(), 1u);
}

TEST(HypergraphFormat, MalformedInputsNameTheLine) {
  EXPECT_EQ(error_line([] { parse_hypergraph(""); }), 1u);
  EXPECT_EQ(error_line([] { parse_hypergraph("5\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_hypergraph("5 3\n1 2 3\n1 2\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_hypergraph("5 3\n1 2 x\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_hypergraph("5 3\n# c\n1 2 9\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_hypergraph("5 3\n1 2 2\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_hypergraph("3 5\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_hypergraph("5 3\n1 2 3.5\n"); }), 2u);
  try {
    parse_hypergraph("5 3\n\n1 0 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 3: ", 0), 0u);
  }
}

TEST(HypergraphFormat, DuplicateEdgeRejectedOnBuild) {
  const auto raw = parse_hypergraph("5 3\n1 2 3\n3 2 1\n");
  EXPECT_THROW(to_hypergraph<Mask>(raw), std::invalid_argument);
}

TEST(ColoringFormat, CompactRoundTrip) {
  const auto c = random_coloring(7, 3, 3, 5);
  std::ostringstream out;
  write_coloring(out, c);
  EXPECT_EQ(parse_coloring(out.str()), c);
}

TEST(ColoringFormat, ExplicitAnyOrder) {
  const auto c = parse_coloring("4 3 2\n2 3 4 2\n1 2 3 1\n1 3 4 2\n4 1 2 1\n");
  EXPECT_EQ(c.color(0), 1);
  EXPECT_EQ(c.color(1), 1);
  EXPECT_EQ(c.color(2), 2);
  EXPECT_EQ(c.color(3), 2);
}

TEST(ColoringFormat, MalformedInputsNameTheLine) {
  EXPECT_EQ(error_line([] { parse_coloring("4 3\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_coloring("4 3 2\n1\n2\n1\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_coloring("4 3 2\n1\n2\n3\n1\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_coloring("4 3 2\n1\n2\n1 2\n1\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_coloring("4 3 2\n1 2 3 1\n1 2 3 2\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_coloring("4 3 2\n1 2 3 1\n1 2 4 1\n1 3 4 1\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_coloring("4 3 0\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_coloring("4 3 2\n1 2 5 1\n"); }), 2u);
  try {
    parse_coloring("4 3 2\n1 2 3 1\n1 2 4 1\n1 3 4 1\n");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("{2 3 4}"), std::string::npos);
  }
}

TEST(DesignFormat, RoundTrip) {
  for (const auto& f : {builtin_design("fano"), builtin_design("s348"), affine_plane(5)}) {
    std::ostringstream out;
    write_design(out, f);
    const auto back = parse_design(out.str());
    EXPECT_EQ(back.blocks, f.blocks);
    EXPECT_EQ(back.n, f.n);
    EXPECT_FALSE(steiner_violation(back).has_value());
  }
}

TEST(DesignFormat, MalformedInputsNameTheLine) {
  EXPECT_EQ(error_line([] { parse_design("7 3\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_design("7 3 2\n1 2\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_design("7 3 2\n1 2 3\n1 2 8\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_design("70 3 2\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_design("7 2 3\n"); }), 1u);
}

TEST(TextHelper, MatchesWriter) {
  const auto c = all_red(4, 3, 2);
  const auto text = to_text(c, [](std::ostream& os, const Coloring& x) { write_coloring(os, x); });
  EXPECT_EQ(text, "4 3 2\n1\n1\n1\n1\n");
}
