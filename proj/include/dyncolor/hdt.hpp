#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dyncolor/euler_tour.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

struct DeleteOutcome {
  enum class Kind { NonTree, Replaced, Split };

  Kind kind = Kind::NonTree;
  // Replacement edge; meaningful only for Replaced.
  VertexId x = kNil;
  VertexId y = kNil;

  static DeleteOutcome non_tree() { return {}; }
  static DeleteOutcome split() { return {Kind::Split, kNil, kNil}; }
  static DeleteOutcome replaced(VertexId x, VertexId y) { return {Kind::Replaced, x, y}; }
};

// Fully dynamic connectivity with leveled spanning forests.
//
// Levels run from 0 to top_level() = ceil(log2 n). A new edge enters at the
// top level, whose forest F_top spans every component; F_i holds the tree
// edges of level <= i. Levels only decrease, and a tree of F_i that has an
// edge spans at most n / 2^(top - i) vertices. Deleting a tree edge searches
// for a replacement from the edge's level upward, always scanning the smaller
// side and pushing failed candidates one level down.
class HdtConnectivity {
 public:
  explicit HdtConnectivity(std::size_t n);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edge_index_.size(); }
  int top_level() const { return top_; }

  bool connected(VertexId u, VertexId v);
  void insert(VertexId u, VertexId v);
  DeleteOutcome remove(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  bool is_tree_edge(VertexId u, VertexId v) const;
  int level(VertexId u, VertexId v) const;
  std::size_t component_size(VertexId v);

  // Tree edges of the top-level forest (the spanning forest of the graph).
  std::vector<std::pair<VertexId, VertexId>> spanning_forest() const;

  // Checks level ranges, forest membership, per-level tree size bounds and the
  // non-tree edge placement rule. Returns an empty string when consistent.
  std::string audit();

  std::uint64_t steps() const;

 private:
  struct Edge {
    VertexId u;
    VertexId v;
    int level;
    bool tree;
    // Index of this edge in u's / v's list at its level.
    std::uint32_t slot[2];
    // Arc nodes per level, valid for levels >= level when tree.
    std::vector<EulerTourForest::ArcPair> arcs;
  };

  static std::uint64_t key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  void check_vertex(VertexId v) const;
  std::uint32_t find_edge(VertexId u, VertexId v) const;
  std::vector<std::uint32_t>& list(bool tree, int level, VertexId v) {
    return (tree ? tree_adj_ : nontree_adj_)[static_cast<std::size_t>(level) * n_ + v];
  }
  void attach(std::uint32_t e);
  void detach(std::uint32_t e);
  void link_levels(std::uint32_t e, int from, int to);

  std::size_t n_;
  int top_;
  std::vector<EulerTourForest> forests_;
  std::vector<std::vector<std::uint32_t>> tree_adj_;
  std::vector<std::vector<std::uint32_t>> nontree_adj_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> free_edges_;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_index_;
  std::uint64_t scan_steps_ = 0;
};

}  // namespace dyncolor
