#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor {

// Euler-tour representation of a forest on [0, n). Each tree is a splay tree
// over its tour: one loop node per vertex (ids 0..n-1) plus two arc nodes per
// tree edge. Loop nodes carry two flag bits aggregated over subtrees so that a
// flagged vertex of a tree can be located in amortized O(log n).
class EulerTourForest {
 public:
  enum Flag : std::uint8_t { kTreeEdges = 1, kNonTreeEdges = 2 };

  struct ArcPair {
    std::uint32_t forward = kNil;
    std::uint32_t backward = kNil;
  };

  explicit EulerTourForest(std::size_t n);

  bool connected(VertexId u, VertexId v);
  std::size_t tree_size(VertexId v);
  ArcPair link(VertexId u, VertexId v);
  void cut(ArcPair arcs);

  void set_flag(VertexId v, Flag flag, bool on);
  bool flag(VertexId v, Flag flag) const { return (nodes_[v].own & flag) != 0; }
  std::optional<VertexId> find_flagged(VertexId v, Flag flag);

  // Vertices of v's tree in tour order.
  std::vector<VertexId> tree_vertices(VertexId v);

  std::uint64_t steps() const { return steps_; }

 private:
  struct Node {
    std::uint32_t left = kNil;
    std::uint32_t right = kNil;
    std::uint32_t parent = kNil;
    std::uint32_t count = 1;  // nodes in subtree
    std::uint32_t loops = 0;  // loop nodes in subtree
    std::uint8_t own = 0;
    std::uint8_t agg = 0;
  };

  bool is_loop(std::uint32_t x) const { return x < n_; }
  void pull(std::uint32_t x);
  void rotate(std::uint32_t x);
  void splay(std::uint32_t x);
  std::uint32_t leftmost(std::uint32_t x);
  std::uint32_t rightmost(std::uint32_t x);
  std::uint32_t join(std::uint32_t a, std::uint32_t b);
  std::uint32_t reroot(VertexId v);
  std::uint32_t new_arc();
  std::size_t position(std::uint32_t x);

  std::size_t n_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> free_arcs_;
  std::uint64_t steps_ = 0;
};

}  // namespace dyncolor
