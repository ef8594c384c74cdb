#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dyncolor/delta1.hpp"
#include "dyncolor/error.hpp"
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

std::set<ColorId> neighbor_colors(const DeltaPlusOneEngine& e, VertexId v) {
  std::set<ColorId> out;
  for (VertexId w : e.graph().neighbors(v)) out.insert(e.color_of(w));
  return out;
}

}  // namespace

TEST(Delta1, Init) {
  DeltaPlusOneEngine e(4, 8, 3);
  for (VertexId v = 0; v < 4; ++v) {
    EXPECT_EQ(e.get_color(v), 1u);
    EXPECT_EQ(e.color_lists().size(v, DeltaPlusOneEngine::kFree), 4u);
  }
  EXPECT_EQ(e.high_count(), 0u);
  EXPECT_EQ(e.threshold(), 4u);
}

TEST(Delta1, FirstConflictPicksTwo) {
  DeltaPlusOneEngine e(4, 8, 3);
  e.insert(0, 1);
  EXPECT_EQ(e.color_of(0), 1u);
  EXPECT_EQ(e.color_of(1), 2u);
  std::uint64_t writes = e.metrics().recolorings;
  e.insert(0, 2);
  EXPECT_EQ(e.color_of(2), 2u);
  e.insert(1, 3);
  EXPECT_EQ(e.metrics().recolorings, writes + 1);
  e.insert(2, 3);  // colors 2 and 1 already differ
  EXPECT_EQ(e.metrics().recolorings, writes + 1);
}

TEST(Delta1, LowVertexTakesSmallestMissing) {
  // Neighbors of 3 wear 1 and 2; inserting (3, 0) with 3 on color 1 forces 3.
  DeltaPlusOneEngine e(5, 20, 4);
  e.insert(0, 1);  // 1 -> 2
  e.insert(3, 1);  // no conflict: 3 has 1, 1 has 2
  ASSERT_EQ(e.color_of(3), 1u);
  e.insert(0, 3);  // 3 recolored; its neighbors wear {1, 2}
  EXPECT_EQ(e.color_of(3), 3u);
}

TEST(Delta1, CrossingThresholdBuildsCounts) {
  // mcap = 8 gives T = 4.
  DeltaPlusOneEngine e(8, 8, 7);
  for (VertexId leaf = 1; leaf <= 3; ++leaf) e.insert(0, leaf);
  EXPECT_FALSE(e.is_high(0));
  e.insert(0, 4);
  ASSERT_TRUE(e.is_high(0));
  std::set<ColorId> used;
  for (ColorId c = 1; c <= e.palette(); ++c) {
    if (e.is_used(0, c)) used.insert(c);
  }
  EXPECT_EQ(used, neighbor_colors(e, 0));
  EXPECT_EQ(e.audit(), "");

  e.remove(0, 4);
  EXPECT_FALSE(e.is_high(0));
  for (ColorId c = 1; c <= e.palette(); ++c) {
    EXPECT_TRUE(e.is_free(0, c));
    EXPECT_EQ(e.count(0, c), 0u);
  }
  EXPECT_EQ(e.audit(), "");
}

TEST(Delta1, HighVertexRecolorAvoidsNeighbors) {
  DeltaPlusOneEngine e(10, 8, 6);
  for (VertexId leaf = 1; leaf <= 4; ++leaf) e.insert(leaf, 0);
  ASSERT_TRUE(e.is_high(0));
  // Force a conflict at the high vertex 0.
  e.insert(5, 6);
  VertexId same = e.color_of(5) == e.color_of(0) ? 5 : 6;
  ASSERT_EQ(e.color_of(same), e.color_of(0));
  e.insert(same, 0);
  EXPECT_EQ(neighbor_colors(e, 0).count(e.color_of(0)), 0u);
  EXPECT_EQ(e.audit(), "");
}

TEST(Delta1, Errors) {
  DeltaPlusOneEngine e(4, 2, 1);
  e.insert(0, 1);
  EXPECT_EQ(code_of([&] { e.insert(1, 0); }), Errc::EdgeExists);
  EXPECT_EQ(code_of([&] { e.insert(1, 2); }), Errc::CapacityExceeded);
  e.insert(2, 3);
  EXPECT_EQ(code_of([&] { e.remove(0, 2); }), Errc::EdgeMissing);
  DeltaPlusOneEngine f(4, 1, 3);
  f.insert(0, 1);
  EXPECT_EQ(code_of([&] { f.insert(2, 3); }), Errc::CapacityExceeded);
  EXPECT_EQ(code_of([&] { f.insert(2, 2); }), Errc::SelfLoop);
}

TEST(Delta1, DeleteLeavesColorsAlone) {
  DeltaPlusOneEngine e(3, 3, 2);
  e.insert(0, 1);
  e.insert(1, 2);
  std::vector<ColorId> before{e.color_of(0), e.color_of(1), e.color_of(2)};
  std::uint64_t writes = e.metrics().recolorings;
  e.remove(1, 2);
  e.remove(0, 1);
  EXPECT_EQ((std::vector<ColorId>{e.color_of(0), e.color_of(1), e.color_of(2)}), before);
  EXPECT_EQ(e.metrics().recolorings, writes);
}

TEST(Delta1, RandomChurnAuditsEveryUpdate) {
  std::mt19937 rng(83);
  const std::size_t n = 64, mcap = 300, dcap = 20;
  DeltaPlusOneEngine e(n, mcap, dcap);
  support::EdgeSet g(n);
  std::vector<std::size_t> deg(n, 0);
  std::uint64_t max_steps = 0;
  for (int step = 0; step < 6000; ++step) {
    VertexId u = support::draw(rng, n), v = support::draw(rng, n);
    if (u == v) continue;
    std::uint64_t writes = e.metrics().recolorings;
    std::uint64_t steps = e.metrics().steps;
    bool was_delete = g.has(u, v);
    if (was_delete) {
      e.remove(u, v);
      g.remove(u, v);
      --deg[u], --deg[v];
    } else if (g.edges.size() < mcap && deg[u] < dcap && deg[v] < dcap) {
      e.insert(u, v);
      g.add(u, v);
      ++deg[u], ++deg[v];
    } else {
      continue;
    }
    max_steps = std::max(max_steps, e.metrics().steps - steps);
    ASSERT_LE(e.metrics().recolorings - writes, was_delete ? 0u : 1u);
    ASSERT_EQ(e.audit(), "") << "step " << step;
    for (VertexId x = 0; x < n; ++x) ASSERT_EQ(e.is_high(x), deg[x] >= e.threshold());
  }
  // Touched entries per update: a few scans of length at most sqrt(2 mcap)
  // or the degree cap.
  EXPECT_LE(max_steps, 8 * (e.threshold() + dcap));
}
