#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dyncolor/color_lists.hpp"
#include "dyncolor/graph.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Fully dynamic (Δ+1)-coloring for general graphs with worst-case O(√m)
// updates and at most one recoloring per update.
//
// Vertices of degree at least T = ceil(sqrt(2 * mcap)) are "high": they sit in
// L_HIGH and keep per-color neighbor counts with FREE/USED color lists, so a
// free color is found in O(1). Low vertices find one by scanning neighbors.
// mcap and dcap (the Δ bound) are capacities fixed at construction.
class DeltaPlusOneEngine {
 public:
  static constexpr std::uint8_t kFree = 0;
  static constexpr std::uint8_t kUsed = 1;

  DeltaPlusOneEngine(std::size_t n, std::size_t mcap, std::size_t dcap);

  std::size_t num_vertices() const { return graph_.num_vertices(); }
  std::size_t palette() const { return palette_; }
  std::size_t threshold() const { return threshold_; }

  void insert(VertexId u, VertexId v);
  void remove(VertexId u, VertexId v);
  ColorId get_color(VertexId v) {
    ColorId c = color_of(v);
    ++metrics_.queries;
    return c;
  }
  ColorId color_of(VertexId v) const {
    graph_.check_vertex(v);
    return color_[v];
  }

  const DynGraph& graph() const { return graph_; }
  bool is_high(VertexId v) const { return in_high_.at(v); }
  std::size_t high_count() const { return high_count_; }
  std::vector<VertexId> high_vertices() const;
  std::uint32_t count(VertexId v, ColorId c) const { return count_[index(v, c)]; }
  bool is_free(VertexId v, ColorId c) const { return lists_.contains(v, c, kFree); }
  bool is_used(VertexId v, ColorId c) const { return lists_.contains(v, c, kUsed); }
  const ColorLists& color_lists() const { return lists_; }

  // Recounts every high vertex's COUNT row and checks the FREE/USED lists,
  // L_HIGH membership and properness. Empty string when consistent.
  std::string audit() const;

  const Metrics& metrics() const { return metrics_; }

 private:
  std::size_t index(VertexId v, ColorId c) const {
    return static_cast<std::size_t>(v) * (palette_ + 1) + c;
  }
  void count_in(VertexId x, ColorId c);
  void count_out(VertexId x, ColorId c);
  void account_new_neighbor(VertexId x, VertexId y);
  void make_high(VertexId x);
  void make_low(VertexId x);
  void recolor(VertexId v);

  std::size_t mcap_;
  std::size_t dcap_;
  std::size_t palette_;
  std::size_t threshold_;
  DynGraph graph_;
  std::vector<ColorId> color_;
  std::vector<std::uint32_t> count_;
  ColorLists lists_;
  // L_HIGH as an intrusive doubly linked list.
  std::vector<bool> in_high_;
  std::vector<VertexId> high_next_;
  std::vector<VertexId> high_prev_;
  VertexId high_head_ = kNil;
  std::size_t high_count_ = 0;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  ColorHistogram histogram_;
  Metrics metrics_;
};

}  // namespace dyncolor
