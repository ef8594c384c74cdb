#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor {

// Rooted dynamic forest over vertices [0, n), represented as splay trees over
// preferred paths. Every operation is amortized O(log n). Queries splay, so
// even find_root needs exclusive access.
class LcForest {
 public:
  explicit LcForest(std::size_t n);

  std::size_t num_vertices() const { return nodes_.size(); }

  VertexId find_root(VertexId v);
  // Makes root `u` a child of `v`.
  void link(VertexId u, VertexId v);
  // Detaches `v` from its parent; `v` becomes the root of its subtree.
  void cut(VertexId v);
  // Number of edges between the represented root and `v`.
  std::size_t path_length(VertexId v);
  // Re-roots v's tree at v, keeping every tree path intact.
  void evert(VertexId v);

  std::optional<VertexId> parent(VertexId v);
  bool connected(VertexId u, VertexId v) { return find_root(u) == find_root(v); }

  // Rotations plus preferred-path switches since construction.
  std::uint64_t steps() const { return steps_; }

 private:
  struct Node {
    std::uint32_t child[2] = {kNil, kNil};
    std::uint32_t parent = kNil;  // splay parent or path-parent
    std::uint32_t size = 1;
    bool flip = false;
  };

  void check_vertex(VertexId v) const;
  bool is_splay_root(std::uint32_t x) const;
  std::uint32_t size_of(std::uint32_t x) const { return x == kNil ? 0 : nodes_[x].size; }
  void pull(std::uint32_t x);
  void push(std::uint32_t x);
  void rotate(std::uint32_t x);
  void splay(std::uint32_t x);
  void access(std::uint32_t x);

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> scratch_;
  std::uint64_t steps_ = 0;
};

}  // namespace dyncolor
