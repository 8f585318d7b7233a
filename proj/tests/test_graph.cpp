#include <gtest/gtest.h>

#include "support.hpp"

namespace evoalg {
namespace {

using testing::Rng;

Digraph example1() { return Digraph({"a", "b", "c"}, {{0, 1}, {2, 1}}); }
Digraph example2() { return Digraph({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 1}}); }
Digraph example3() { return Digraph({"a", "b", "c"}, {{1, 0}, {1, 2}, {2, 1}}); }
Digraph two_cycle() { return Digraph(2, {{0, 1}, {1, 0}}); }
Digraph loop() { return Digraph(1, {{0, 0}}); }

std::uint64_t balance(const Digraph& g) { return graph_balance(g, components(g).front()); }

TEST(Digraph, FromAlgebra) {
  const FieldSpec f = FieldSpec::prime(7);
  const Digraph g = graph_from_algebra(testing::two_cycle(f, 3));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 0}}));
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"v1", "v2"}));
  // 7 vanishes in GF(7)
  EXPECT_TRUE(graph_from_algebra(testing::two_cycle(f, 7)).has_edge(0, 1));
  EXPECT_FALSE(graph_from_algebra(testing::two_cycle(f, 7)).has_edge(1, 0));
}

TEST(Digraph, RejectsBadEdges) {
  EXPECT_THROW(Digraph(2, {{0, 2}}), InputError);
  EXPECT_THROW(degrees(two_cycle(), 5), InputError);
  EXPECT_THROW(two_cycle().index_of("zz"), InputError);
}

TEST(Digraph, DuplicateEdgesCollapse) {
  const Digraph g(2, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.edges().size(), 2u);
}

TEST(Digraph, SourcesAndSinks) {
  const Digraph g2 = example2();
  EXPECT_EQ(sources(g2), std::vector<std::size_t>{0});
  EXPECT_TRUE(sinks(g2).empty());
  const Digraph g3 = example3();
  EXPECT_TRUE(sources(g3).empty());
  EXPECT_EQ(sinks(g3), std::vector<std::size_t>{0});
  EXPECT_EQ(degrees(loop(), 0), (Degree{1, 1}));
  EXPECT_TRUE(sources(loop()).empty());
}

TEST(Digraph, Components) {
  const Digraph g(5, {{0, 1}, {3, 2}, {4, 4}});
  const auto cs = components(g);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], (Component{0, 1}));
  EXPECT_EQ(cs[1], (Component{2, 3}));
  EXPECT_EQ(cs[2], (Component{4}));
}

TEST(Walks, Balances) {
  // e1 = (1,0), e2 = (1,2), e3 = (3,2): walk 0 -> 1 -> 2 -> 3
  const Walk w{0, {{{1, 0}, -1}, {{1, 2}, +1}, {{3, 2}, -1}}};
  EXPECT_EQ(walk_balance(w), -1);
  EXPECT_EQ(walk_end(w), 3u);
  EXPECT_EQ(walk_balance(Walk{2, {}}), 0);
  EXPECT_EQ(walk_balance(Walk{0, {{{0, 1}, 1}, {{1, 0}, 1}}}), 2);
  EXPECT_THROW(walk_balance(Walk{0, {{{1, 2}, 1}}}), InputError);
  EXPECT_TRUE(is_walk_in(Digraph(4, {{1, 0}, {1, 2}, {3, 2}}), w));
  EXPECT_FALSE(is_walk_in(two_cycle(), w));
}

TEST(Balance, Examples) {
  EXPECT_EQ(balance(two_cycle()), 2u);
  EXPECT_EQ(balance(loop()), 1u);
  EXPECT_EQ(balance(example3()), 2u);
  EXPECT_EQ(balance(example1()), 0u);
  EXPECT_EQ(balance(example2()), 2u);
}

TEST(CycleBalances, Examples) {
  const auto two = enumerate_cycle_balances(two_cycle(), 4);
  for (std::int64_t b : {2, -2, 4, -4}) EXPECT_TRUE(two.contains(b)) << b;
  // turning back along the cycle would retrace an edge
  EXPECT_FALSE(two.contains(0));
  const auto l = enumerate_cycle_balances(loop());
  EXPECT_TRUE(l.contains(1));
  EXPECT_TRUE(l.contains(-1));
  EXPECT_TRUE(enumerate_cycle_balances(example1()).empty());
  EXPECT_TRUE(enumerate_cycle_balances(Digraph(3, {{0, 1}, {1, 2}})).empty());
}

TEST(Dot, Format) {
  EXPECT_EQ(to_dot(two_cycle()), "digraph {\n  \"v1\" -> \"v2\";\n  \"v2\" -> \"v1\";\n}\n");
  const std::string isolated = to_dot(Digraph(2, {}));
  EXPECT_NE(isolated.find("\"v1\";"), std::string::npos);
}

TEST(BalanceProperty, IndependentOfRootAndTree) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const Digraph g = testing::random_digraph(rng, testing::uniform(rng, 1, 7), 0.3);
    for (const Component& c : components(g)) {
      const std::uint64_t b = graph_balance(g, c);
      std::vector<Edge> order = g.edges();
      for (int k = 0; k < 4; ++k) {
        std::shuffle(order.begin(), order.end(), rng);
        const std::size_t root = c[testing::uniform(rng, 0, c.size() - 1)];
        EXPECT_EQ(graph_balance(g, c, root, order), b);
      }
    }
  }
}

TEST(BalanceProperty, MatchesSimpleCycleOracle) {
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    const Digraph g = testing::random_digraph(rng, testing::uniform(rng, 1, 7), 0.3);
    std::uint64_t b = 0;
    for (const Component& c : components(g)) b = std::gcd(b, graph_balance(g, c));
    EXPECT_EQ(b, testing::oracle_cycle_gcd(g));
    std::uint64_t enumerated = 0;
    for (std::int64_t x : enumerate_cycle_balances(g)) enumerated = std::gcd(enumerated, static_cast<std::uint64_t>(std::abs(x)));
    EXPECT_EQ(enumerated, b);
  }
}

TEST(BalanceProperty, TreeWalksRealisePotentials) {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const Digraph g = testing::random_digraph(rng, testing::uniform(rng, 1, 6), 0.35);
    for (const Component& c : components(g)) {
      const auto pot = walk_potentials(g, c, c.front());
      for (std::size_t v : c) {
        const Walk w = tree_walk(g, c, c.front(), v);
        EXPECT_TRUE(is_walk_in(g, w));
        EXPECT_EQ(walk_end(w), v);
        ASSERT_TRUE(pot[v]);
        EXPECT_EQ(walk_balance(w), *pot[v]);
      }
    }
  }
}

TEST(BalanceProperty, ConcatenationAddsBalances) {
  Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    const Digraph g = testing::random_digraph(rng, testing::uniform(rng, 2, 6), 0.4);
    const auto cs = components(g);
    const Component& c = cs.front();
    const std::size_t u = c[testing::uniform(rng, 0, c.size() - 1)];
    const std::size_t v = c[testing::uniform(rng, 0, c.size() - 1)];
    const Walk a = tree_walk(g, c, c.front(), u);
    Walk b = tree_walk(g, c, u, v);
    Walk joined = a;
    joined.steps.insert(joined.steps.end(), b.steps.begin(), b.steps.end());
    EXPECT_EQ(walk_balance(joined), walk_balance(a) + walk_balance(b));
    EXPECT_EQ(walk_end(joined), v);
  }
}

}  // namespace
}  // namespace evoalg
