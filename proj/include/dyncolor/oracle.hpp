#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor::oracle {

// Frozen copy of a simple undirected graph. Edges are stored as (min, max)
// pairs in sorted order; the adjacency lists are derived from them.
class Snapshot {
 public:
  using Edge = std::pair<VertexId, VertexId>;

  Snapshot() = default;
  Snapshot(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
};

struct Bipartition {
  // side[v] is 0 or 1; each component's lowest-id vertex gets side 0.
  std::vector<std::uint8_t> side;
  // Closed walk of odd length when no bipartition exists (first == last).
  std::vector<VertexId> odd_cycle;
  bool bipartite() const { return odd_cycle.empty(); }
};

Bipartition bfs_bipartition(const Snapshot& s);
bool is_bipartite(const Snapshot& s);
bool connected_bfs(const Snapshot& s, VertexId u, VertexId v);
bool proper_check(const Snapshot& s, const std::vector<ColorId>& colors);
std::vector<std::size_t> component_sizes(const Snapshot& s);
// BFS depth of every vertex from `root` within its component; kNil elsewhere.
std::vector<std::uint32_t> bfs_depths(const Snapshot& s, VertexId root);

}  // namespace dyncolor::oracle
