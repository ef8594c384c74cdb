#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dyncolor/euler_tour.hpp"
#include "support.hpp"

using namespace dyncolor;

TEST(EulerTour, LinkCutConnectivityAndSize) {
  EulerTourForest f(4);
  EXPECT_EQ(f.tree_size(0), 1u);
  auto a = f.link(0, 1);
  auto b = f.link(1, 2);
  EXPECT_TRUE(f.connected(0, 2));
  EXPECT_EQ(f.tree_size(2), 3u);
  EXPECT_FALSE(f.connected(0, 3));
  f.cut(a);
  EXPECT_FALSE(f.connected(0, 2));
  EXPECT_EQ(f.tree_size(1), 2u);
  f.cut(b);
  EXPECT_EQ(f.tree_size(1), 1u);
}

TEST(EulerTour, FlagsAreFoundWithinTheTree) {
  EulerTourForest f(5);
  f.link(0, 1);
  f.link(1, 2);
  EXPECT_FALSE(f.find_flagged(0, EulerTourForest::kNonTreeEdges).has_value());
  f.set_flag(2, EulerTourForest::kNonTreeEdges, true);
  f.set_flag(4, EulerTourForest::kNonTreeEdges, true);
  EXPECT_EQ(f.find_flagged(0, EulerTourForest::kNonTreeEdges), std::optional<VertexId>(2));
  EXPECT_FALSE(f.find_flagged(0, EulerTourForest::kTreeEdges).has_value());
  f.set_flag(2, EulerTourForest::kNonTreeEdges, false);
  EXPECT_FALSE(f.find_flagged(1, EulerTourForest::kNonTreeEdges).has_value());
  EXPECT_TRUE(f.flag(4, EulerTourForest::kNonTreeEdges));
}

TEST(EulerTour, RandomForestMatchesDsuRebuild) {
  std::mt19937 rng(21);
  const std::size_t n = 40;
  EulerTourForest f(n);
  std::map<support::Pair, EulerTourForest::ArcPair> arcs;
  for (int step = 0; step < 3000; ++step) {
    VertexId u = support::draw(rng, n), v = support::draw(rng, n);
    if (support::draw(rng, 2) == 0 && !arcs.empty()) {
      auto it = arcs.begin();
      std::advance(it, support::draw(rng, arcs.size()));
      f.cut(it->second);
      arcs.erase(it);
    } else if (u != v && !f.connected(u, v)) {
      arcs[support::norm(u, v)] = f.link(u, v);
    }
    if (step % 50 != 0) continue;
    support::Dsu dsu(n);
    for (const auto& [e, _] : arcs) ASSERT_TRUE(dsu.unite(e.first, e.second)) << "cycle in forest";
    std::vector<std::size_t> size(n, 0);
    for (VertexId x = 0; x < n; ++x) ++size[dsu.find(x)];
    for (VertexId x = 0; x < n; ++x) {
      ASSERT_EQ(f.tree_size(x), size[dsu.find(x)]);
      auto members = f.tree_vertices(x);
      ASSERT_EQ(members.size(), size[dsu.find(x)]);
      for (VertexId y : members) ASSERT_EQ(dsu.find(y), dsu.find(x));
      VertexId y = support::draw(rng, n);
      ASSERT_EQ(f.connected(x, y), dsu.find(x) == dsu.find(y));
    }
  }
}
