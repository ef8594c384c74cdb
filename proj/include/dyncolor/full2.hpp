#pragma once

#include <cstddef>
#include <vector>

#include "dyncolor/hdt.hpp"
#include "dyncolor/linkcut.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Fully dynamic implicit 2-coloring of a bipartite graph.
//
// The spanning forest of the connectivity structure is mirrored in a
// link-cut forest. A vertex's color is the stored color of its link-cut root
// when its depth is even and the negation otherwise; stored colors are
// authoritative only at roots. Each update writes at most one stored color.
//
// The two highest vertex ids are reserved as auxiliary vertices for
// connected_via_coloring(); the real graph lives on [0, n - 2).
class Full2Engine {
 public:
  explicit Full2Engine(std::size_t n);

  std::size_t num_vertices() const { return n_; }
  VertexId aux_a() const { return static_cast<VertexId>(n_ - 2); }
  VertexId aux_b() const { return static_cast<VertexId>(n_ - 1); }

  bool get_color(VertexId v);
  InsertOutcome insert(VertexId u, VertexId v);
  void remove(VertexId u, VertexId v);

  // Answers connectivity using only colors, inserts and deletes through the
  // auxiliary vertices; leaves the graph and all real colors as they were.
  bool connected_via_coloring(VertexId u, VertexId v);

  // Uncounted color read.
  bool color_of(VertexId v);
  bool has_edge(VertexId u, VertexId v) const { return hdt_.has_edge(u, v); }
  std::size_t degree(VertexId v) const { return degree_.at(v); }

  const Metrics& metrics() const { return metrics_; }
  std::uint64_t structural_steps() const { return hdt_.steps() + forest_.steps(); }

  HdtConnectivity& connectivity() { return hdt_; }
  LcForest& forest() { return forest_; }

 private:
  void check_vertex(VertexId v) const;
  void write_root_color(VertexId root, bool color);
  void note_edge_added();

  std::size_t n_;
  HdtConnectivity hdt_;
  LcForest forest_;
  std::vector<bool> stored_color_;
  std::vector<std::size_t> degree_;
  Metrics metrics_;
};

}  // namespace dyncolor
