#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dyncolor/color_lists.hpp"
#include "dyncolor/graph.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Edge (from -> to) that a flush turned into (to -> from).
struct Reorientation {
  VertexId from;
  VertexId to;
  friend bool operator==(const Reorientation&, const Reorientation&) = default;
};

// Edge orientation with out-degree threshold `max_out`, maintained by the
// reset rule: a new edge leaves the endpoint of smaller out-degree (ties
// leave u), then any vertex above the threshold reverses all its out-edges
// until none remains.
class Orientation {
 public:
  struct Inserted {
    VertexId tail;
    VertexId head;
    std::vector<Reorientation> flips;
  };

  Orientation(std::size_t n, std::size_t max_out);

  std::size_t num_vertices() const { return out_.num_vertices(); }
  std::size_t max_out() const { return max_out_; }
  std::size_t out_degree(VertexId v) const { return out_.size(v); }
  bool directed(VertexId from, VertexId to) const { return out_.contains(from, to); }
  bool has_edge(VertexId u, VertexId v) const { return directed(u, v) || directed(v, u); }
  IndexedAdjacency::Range out(VertexId v) const { return out_.list(v); }

  Inserted orient_insert(VertexId u, VertexId v);
  // Returns (tail, head) of the removed edge.
  std::pair<VertexId, VertexId> orient_delete(VertexId u, VertexId v);

  std::uint64_t total_flips() const { return total_flips_; }

 private:
  IndexedAdjacency out_;
  std::size_t max_out_;
  std::size_t edges_ = 0;
  std::uint64_t total_flips_ = 0;
  std::vector<VertexId> work_;
  std::vector<VertexId> targets_;
};

// Fully dynamic (Δ+1)-coloring for graphs of arboricity at most gamma, built
// on a (4 gamma)-orientation. Each vertex counts the colors of its
// in-neighbors only; out-neighbors (at most 4 gamma) are checked on demand.
// Free(v) holds exactly the colors no in-neighbor wears.
class ArbEngine {
 public:
  static constexpr std::uint8_t kFree = 0;

  ArbEngine(std::size_t n, std::size_t gamma, std::size_t dcap);

  std::size_t num_vertices() const { return graph_.num_vertices(); }
  std::size_t palette() const { return palette_; }
  std::size_t gamma() const { return gamma_; }

  void insert(VertexId u, VertexId v);
  void remove(VertexId u, VertexId v);
  void recolor_low_arb(VertexId v);
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
  const Orientation& orientation() const { return orientation_; }
  std::uint32_t count(VertexId v, ColorId c) const { return count_[index(v, c)]; }
  bool in_free(VertexId v, ColorId c) const { return free_.contains(v, c, kFree); }
  const ColorLists& free_lists() const { return free_; }

  // Recounts in-neighbor colors and checks Free(v) against COUNT_v, the
  // orientation against the graph, and properness. Empty string when consistent.
  std::string audit() const;

  const Metrics& metrics() const { return metrics_; }

 private:
  std::size_t index(VertexId v, ColorId c) const {
    return static_cast<std::size_t>(v) * (palette_ + 1) + c;
  }
  void count_in(VertexId x, ColorId c);
  void count_out(VertexId x, ColorId c);
  void apply_flips(const std::vector<Reorientation>& flips);

  std::size_t gamma_;
  std::size_t dcap_;
  std::size_t palette_;
  DynGraph graph_;
  Orientation orientation_;
  std::vector<ColorId> color_;
  std::vector<std::uint32_t> count_;
  ColorLists free_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  ColorHistogram histogram_;
  Metrics metrics_;
};

}  // namespace dyncolor
