#include "dyncolor/parity_dsu.hpp"

#include <string>
#include <utility>

#include "dyncolor/error.hpp"

namespace dyncolor {

ParityDsu::ParityDsu(std::size_t capacity)
    : parent_(capacity, kNil), flag_(capacity, true), size_(capacity, 0) {}

void ParityDsu::require(VertexId x) const {
  if (!contains(x)) throw Error(Errc::NotPresent, "node " + std::to_string(x));
}

void ParityDsu::makeset(VertexId x) {
  if (x >= parent_.size()) throw Error(Errc::VertexOutOfRange, "node " + std::to_string(x));
  if (parent_[x] != kNil) throw Error(Errc::AlreadyPresent, "node " + std::to_string(x));
  parent_[x] = x;
  flag_[x] = true;
  size_[x] = 1;
}

ParityDsu::Found ParityDsu::find(VertexId x) {
  require(x);
  chain_.clear();
  VertexId root = x;
  while (parent_[root] != root) {
    ++steps_;
    chain_.push_back(root);
    root = parent_[root];
  }
  // Rewrite from the node nearest the root outward, so each node XNORs its
  // flag with a parent whose flag is already relative to the root.
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
    VertexId node = *it;
    VertexId p = parent_[node];
    if (p != root) {
      flag_[node] = flag_[node] == flag_[p];
      parent_[node] = root;
    }
  }
  return {root, flag_[x]};
}

bool ParityDsu::is_root(VertexId x) const {
  require(x);
  return parent_[x] == x;
}

std::size_t ParityDsu::set_size(VertexId root) const {
  require(root);
  return size_[root];
}

VertexId ParityDsu::union_link(VertexId x_root, VertexId y_root, bool flag) {
  if (!is_root(x_root)) throw Error(Errc::NotARoot, "node " + std::to_string(x_root));
  if (!is_root(y_root)) throw Error(Errc::NotARoot, "node " + std::to_string(y_root));
  if (x_root == y_root) throw Error(Errc::SameRoot, "node " + std::to_string(x_root));
  if (size_[x_root] < size_[y_root]) std::swap(x_root, y_root);
  parent_[y_root] = x_root;
  size_[x_root] += size_[y_root];
  flag_[y_root] = flag;
  return x_root;
}

}  // namespace dyncolor
