#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dyncolor/error.hpp"
#include "dyncolor/inclog.hpp"
#include "support.hpp"

using namespace dyncolor;

namespace {

// Least color whose bit is set, by scanning colors upward.
ColorId linear_scan(const ColorWord& w) {
  for (ColorId c = 1; c <= w.width(); ++c) {
    if (w.is_set(c)) return c;
  }
  return 0;
}

}  // namespace

TEST(ColorWord, SelectExamples) {
  EXPECT_EQ(select_free_color(ColorWord::all_set(5)), 1u);
  ColorWord w = ColorWord::all_set(5);
  w.clear(1);  // 01111
  EXPECT_EQ(select_free_color(w), 2u);
  EXPECT_EQ(w.leading_zeros(), 1u);
  ColorWord empty = ColorWord::all_set(3);
  for (ColorId c = 1; c <= 3; ++c) empty.clear(c);
  EXPECT_TRUE(empty.none());
  EXPECT_THROW(select_free_color(empty), Error);
}

TEST(ColorWord, RandomWordsMatchLinearScan) {
  std::mt19937 rng(71);
  for (std::size_t width : {1u, 5u, 33u, 63u, 64u, 65u, 100u, 127u, 128u}) {
    for (int trial = 0; trial < 500; ++trial) {
      ColorWord w = ColorWord::all_set(width);
      for (ColorId c = 1; c <= width; ++c) {
        if (support::draw(rng, 4) != 0) w.clear(c);
      }
      ColorId expected = linear_scan(w);
      if (expected == 0) {
        EXPECT_TRUE(w.none());
        continue;
      }
      ASSERT_EQ(select_free_color(w), expected) << "width " << width;
    }
  }
}

TEST(ColorWord, PaletteWidth) {
  EXPECT_EQ(log_palette_width(1), 1u);
  EXPECT_EQ(log_palette_width(2), 3u);
  EXPECT_EQ(log_palette_width(1024), 21u);
  EXPECT_EQ(log_palette_width(1025), 23u);
}

TEST(LogColor, FreshVertex) {
  LogColorEngine e(8);
  EXPECT_EQ(e.get_color(3), 1u);
  const ColorWord& w1 = e.own_word(3);
  for (ColorId c = 1; c <= e.palette_width(); ++c) EXPECT_EQ(w1.is_set(c), c != 1) << c;
  EXPECT_EQ(e.opposite_word(3), ColorWord::all_set(e.palette_width()));
}

TEST(LogColor, FirstConflictRecolorsOneEndpointToTwo) {
  LogColorEngine e(4);
  EXPECT_EQ(e.union_insert(0, 1), InsertOutcome::Added);
  std::multiset<ColorId> got{e.get_color(0), e.get_color(1)};
  EXPECT_EQ(got, (std::multiset<ColorId>{1, 2}));
  EXPECT_EQ(e.metrics().recolorings, 1u);
}

TEST(LogColor, InComponentInsertChangesNothing) {
  LogColorEngine e(4);
  e.union_insert(0, 1);
  e.union_insert(1, 2);
  e.union_insert(2, 3);
  VertexId root = e.dsu().find(0).root;
  ColorWord w1 = e.own_word(root), w2 = e.opposite_word(root);
  std::uint64_t writes = e.metrics().recolorings;
  EXPECT_EQ(e.union_insert(0, 3), InsertOutcome::Added);
  EXPECT_EQ(e.metrics().recolorings, writes);
  EXPECT_EQ(e.own_word(root), w1);
  EXPECT_EQ(e.opposite_word(root), w2);
  EXPECT_EQ(e.union_insert(0, 2), InsertOutcome::Rejected);
}

TEST(LogColor, Errors) {
  LogColorEngine e(4, false);
  EXPECT_THROW(e.get_color(0), Error);
  e.makeset_explicit(0);
  EXPECT_THROW(e.makeset_explicit(0), Error);
  EXPECT_THROW(e.union_insert(0, 1), Error);
  EXPECT_THROW(e.union_insert(0, 0), Error);
}

TEST(LogColor, RandomTracesKeepEveryInvariant) {
  std::mt19937 rng(73);
  for (std::size_t n : {4u, 9u, 32u, 300u}) {
    LogColorEngine e(n);
    support::EdgeSet g(n);
    const std::size_t bound = 1 + 2 * static_cast<std::size_t>(std::ceil(std::log2(n)));
    for (int step = 0; step < 6 * static_cast<int>(n); ++step) {
      VertexId u = support::draw(rng, n), v = support::draw(rng, n);
      if (u == v || g.has(u, v)) continue;
      bool odd = support::closes_odd_cycle(g, u, v);
      std::uint64_t writes = e.metrics().recolorings;
      ASSERT_EQ(e.union_insert(u, v) == InsertOutcome::Rejected, odd);
      ASSERT_LE(e.metrics().recolorings - writes, 1u);
      if (!odd) g.add(u, v);

      auto snap = g.snapshot();
      auto sizes = oracle::component_sizes(snap);
      for (auto [a, b] : g.edges) ASSERT_NE(e.color_of(a), e.color_of(b));
      for (VertexId x = 0; x < n; ++x) {
        ColorId t = e.color_of(x);
        ASSERT_LE(t, bound);
        ASSERT_GE(sizes[x], std::size_t{1} << (t / 2)) << "vertex " << x << " color " << t;
      }
      // Set bits in the root words are sound: nobody on that side wears the color.
      for (VertexId x = 0; x < n; ++x) {
        auto [root, same_side] = e.dsu().find(x);
        const ColorWord& word = same_side ? e.own_word(root) : e.opposite_word(root);
        ASSERT_FALSE(word.is_set(e.color_of(x))) << "vertex " << x;
      }
    }
    EXPECT_LE(e.max_color(), bound);
  }
}

TEST(LogColor, EdgeInsideComponentCanStillConflict) {
  // Merging {0:2, 1:1} with {2:2, 3:1} through 0-2 leaves color 1 on both
  // sides; the closing edge 1-3 must then recolor.
  LogColorEngine e(4);
  e.union_insert(0, 1);
  e.union_insert(2, 3);
  ASSERT_EQ(e.color_of(0), 2u);
  ASSERT_EQ(e.color_of(2), 2u);
  e.union_insert(0, 2);
  ASSERT_EQ(e.color_of(1), e.color_of(3));
  std::uint64_t writes = e.metrics().recolorings;
  EXPECT_EQ(e.union_insert(1, 3), InsertOutcome::Added);
  EXPECT_NE(e.color_of(1), e.color_of(3));
  EXPECT_EQ(e.metrics().recolorings - writes, 1u);
}
