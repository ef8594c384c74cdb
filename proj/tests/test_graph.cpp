#include <gtest/gtest.h>

#include <random>

#include "dyncolor/error.hpp"
#include "dyncolor/graph.hpp"
#include "support.hpp"

using namespace dyncolor;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ContractViolation;
}

void expect_matches(const DynGraph& g, const support::EdgeSet& oracle) {
  std::size_t degree_sum = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    std::multiset<VertexId> listed(g.neighbors(u).begin(), g.neighbors(u).end());
    std::multiset<VertexId> expected;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      ASSERT_EQ(g.has_edge(u, v), oracle.has(u, v)) << u << "-" << v;
      if (oracle.has(u, v)) expected.insert(v);
    }
    EXPECT_EQ(listed, expected) << "vertex " << u;
    EXPECT_EQ(g.degree(u), expected.size());
    degree_sum += g.degree(u);
  }
  EXPECT_EQ(degree_sum, 2 * oracle.edges.size());
  EXPECT_EQ(g.num_edges(), oracle.edges.size());
}

}  // namespace

TEST(DynGraph, SingleEdgeDegrees) {
  DynGraph g(4);
  g.add_edge(0, 1);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(DynGraph, Errors) {
  DynGraph g(3);
  g.add_edge(0, 1);
  EXPECT_EQ(code_of([&] { g.add_edge(0, 1); }), Errc::EdgeExists);
  EXPECT_EQ(code_of([&] { g.add_edge(1, 0); }), Errc::EdgeExists);
  EXPECT_EQ(code_of([&] { g.add_edge(2, 2); }), Errc::SelfLoop);
  EXPECT_EQ(code_of([&] { g.add_edge(0, 3); }), Errc::VertexOutOfRange);
  EXPECT_EQ(code_of([&] { g.remove_edge(0, 2); }), Errc::EdgeMissing);
  EXPECT_EQ(code_of([&] { g.neighbors(7); }), Errc::VertexOutOfRange);
}

TEST(DynGraph, AddThenRemove) {
  DynGraph g(2);
  g.add_edge(0, 1);
  g.remove_edge(1, 0);
  EXPECT_EQ(g.degree(0), 0u);
  EXPECT_FALSE(g.has_edge(0, 1));
  g.add_edge(0, 1);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(DynGraph, IsolatedAndStar) {
  DynGraph g(6);
  EXPECT_EQ(g.neighbors(0).begin(), g.neighbors(0).end());
  for (VertexId leaf = 1; leaf <= 5; ++leaf) g.add_edge(0, leaf);
  std::multiset<VertexId> got(g.neighbors(0).begin(), g.neighbors(0).end());
  EXPECT_EQ(got, (std::multiset<VertexId>{1, 2, 3, 4, 5}));
}

TEST(DynGraph, RandomEdgesMatchSetOracle) {
  std::mt19937 rng(7);
  DynGraph g(30);
  support::EdgeSet oracle(30);
  int added = 0;
  while (added < 100) {
    VertexId u = support::draw(rng, 30), v = support::draw(rng, 30);
    if (u == v || oracle.has(u, v)) continue;
    g.add_edge(u, v);
    oracle.add(u, v);
    ++added;
  }
  expect_matches(g, oracle);
}

TEST(DynGraph, InterleavedUpdatesMatchSetOracle) {
  std::mt19937 rng(11);
  const std::size_t n = 25;
  DynGraph g(n);
  support::EdgeSet oracle(n);
  for (int step = 0; step < 5000; ++step) {
    VertexId u = support::draw(rng, n), v = support::draw(rng, n);
    if (u == v) continue;
    if (oracle.has(u, v)) {
      g.remove_edge(u, v);
      oracle.remove(u, v);
    } else {
      g.add_edge(u, v);
      oracle.add(u, v);
    }
    if (step % 500 == 0) expect_matches(g, oracle);
  }
  expect_matches(g, oracle);
}
