#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor {

// Union-find whose nodes carry a same-bipartition flag relative to their
// parent: flag(x) is true iff x and parent(x) sit on the same side. Roots have
// flag true. Path compression rewrites flags by XNOR with the new parent.
class ParityDsu {
 public:
  struct Found {
    VertexId root;
    // True iff the node is on its root's side.
    bool flag;
  };

  explicit ParityDsu(std::size_t capacity);

  std::size_t capacity() const { return parent_.size(); }
  bool contains(VertexId x) const { return x < parent_.size() && parent_[x] != kNil; }

  void makeset(VertexId x);
  Found find(VertexId x);
  // Hangs the smaller root below the larger one. `flag` is the relative side
  // of the two roots (true = same side) and is symmetric, so it survives the
  // swap. Returns the surviving root.
  VertexId union_link(VertexId x_root, VertexId y_root, bool flag);

  bool is_root(VertexId x) const;
  std::size_t set_size(VertexId root) const;
  VertexId parent(VertexId x) const { return parent_.at(x); }
  bool flag(VertexId x) const { return flag_.at(x); }

  // Parent-chain steps taken by find().
  std::uint64_t steps() const { return steps_; }

 private:
  void require(VertexId x) const;

  std::vector<VertexId> parent_;
  std::vector<bool> flag_;
  std::vector<std::uint32_t> size_;
  std::vector<VertexId> chain_;
  std::uint64_t steps_ = 0;
};

}  // namespace dyncolor
