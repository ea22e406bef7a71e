#include <gtest/gtest.h>

#include <set>

#include "grapes/generate.hpp"
#include "grapes/json_io.hpp"

using namespace grapes;

TEST(Generate, Deterministic) {
  EXPECT_EQ(gen::complex(5, 0.2, 7), gen::complex(5, 0.2, 7));
  EXPECT_EQ(grapes::json::to_json(gen::forest(9, 3, 2)), grapes::json::to_json(gen::forest(9, 3, 2)));
  EXPECT_EQ(grapes::json::to_json(gen::digraph(4, 6, 5)), grapes::json::to_json(gen::digraph(4, 6, 5)));
  const auto a = gen::random_complexes(30, 6, 11);
  const auto b = gen::random_complexes(30, 6, 11);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, gen::random_complexes(30, 6, 12));
}

TEST(Generate, ForestShape) {
  const Graph one = gen::forest(1, 0);
  EXPECT_EQ(one.order(), 1u);
  EXPECT_EQ(one.size(), 0u);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph t = gen::forest(8, seed);
    EXPECT_TRUE(is_forest(t));
    EXPECT_EQ(count_components(t), 1u);
    const Graph f = gen::forest(8, seed, 3);
    EXPECT_TRUE(is_forest(f));
    EXPECT_EQ(count_components(f), 4u);
  }
}

TEST(Generate, ComplexShape) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Complex c = gen::complex(0, 0.5, seed);
    EXPECT_TRUE(c.is_void() || c.is_irrelevant());
  }
  EXPECT_TRUE(gen::complex(4, 0.0, 1).is_void());
  EXPECT_EQ(gen::complex(4, 1.0, 1), Complex::simplex(GroundSet(gen::numbered("x", 4))));
  EXPECT_THROW(gen::complex(17, 0.1, 1), InputError);
}

TEST(Generate, DigraphShape) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Digraph d = gen::digraph(2, 1, seed);
    ASSERT_EQ(d.arcs().size(), 1u);
    EXPECT_NE(d.arcs()[0].source, d.arcs()[0].target);
    EXPECT_EQ(d.s(), 0u);
    EXPECT_EQ(d.t(), 1u);
    const Digraph loop = gen::digraph(1, 2, seed);
    for (const Arc& a : loop.arcs()) EXPECT_EQ(a.source, a.target);
  }
  EXPECT_THROW(gen::digraph(0, 1, 0), InputError);
}

TEST(AllComplexes, CountsAreTheDedekindNumbers) {
  const std::size_t expected[] = {2, 3, 6, 20, 168, 7581};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto cs = gen::all_complexes(n);
    EXPECT_EQ(cs.size(), expected[n]);
    std::set<std::vector<Face>> distinct;
    for (const Complex& c : cs) distinct.insert(c.facets());
    EXPECT_EQ(distinct.size(), cs.size());
  }
  EXPECT_THROW(gen::all_complexes(6), InputError);
}

TEST(AllTrees, CountsMatchUnlabeledTrees) {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto ts = gen::all_trees(n);
    EXPECT_EQ(ts.size(), expected[n]) << n;
    std::set<std::string> codes;
    for (const Graph& t : ts) {
      EXPECT_TRUE(is_forest(t));
      EXPECT_EQ(count_components(t), 1u);
      codes.insert(gen::detail::tree_code(t.order(), t.edges()));
    }
    EXPECT_EQ(codes.size(), ts.size());
  }
}

TEST(AllDigraphs, CountsMultisetsTimesEndpoints) {
  // One vertex: 1 loop kind, multisets of size 0..2 -> 3 graphs, one (s, t).
  EXPECT_EQ(gen::all_digraphs(1, 2).size(), 3u);
  // Two vertices: 4 arc kinds, multisets of size <= 2 -> 1 + 4 + 10 = 15, and 4 (s, t) choices.
  EXPECT_EQ(gen::all_digraphs(2, 2).size(), 3u + 15u * 4u);
}
