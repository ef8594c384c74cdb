#include "dyncolor/linkcut.hpp"

#include <string>
#include <utility>

#include "dyncolor/error.hpp"

namespace dyncolor {

LcForest::LcForest(std::size_t n) : nodes_(n) {}

void LcForest::check_vertex(VertexId v) const {
  if (v >= nodes_.size()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
}

bool LcForest::is_splay_root(std::uint32_t x) const {
  std::uint32_t p = nodes_[x].parent;
  return p == kNil || (nodes_[p].child[0] != x && nodes_[p].child[1] != x);
}

void LcForest::pull(std::uint32_t x) {
  Node& n = nodes_[x];
  n.size = 1 + size_of(n.child[0]) + size_of(n.child[1]);
}

void LcForest::push(std::uint32_t x) {
  Node& n = nodes_[x];
  if (!n.flip) return;
  std::swap(n.child[0], n.child[1]);
  for (std::uint32_t c : n.child) {
    if (c != kNil) nodes_[c].flip = !nodes_[c].flip;
  }
  n.flip = false;
}

void LcForest::rotate(std::uint32_t x) {
  ++steps_;
  std::uint32_t p = nodes_[x].parent;
  std::uint32_t g = nodes_[p].parent;
  int dir = nodes_[p].child[1] == x ? 1 : 0;
  std::uint32_t b = nodes_[x].child[dir ^ 1];

  if (!is_splay_root(p)) {
    Node& gn = nodes_[g];
    gn.child[gn.child[1] == p ? 1 : 0] = x;
  }
  nodes_[x].parent = g;

  nodes_[x].child[dir ^ 1] = p;
  nodes_[p].parent = x;

  nodes_[p].child[dir] = b;
  if (b != kNil) nodes_[b].parent = p;

  pull(p);
  pull(x);
}

void LcForest::splay(std::uint32_t x) {
  // Pending flips must be pushed top-down before rotations read child order.
  scratch_.clear();
  std::uint32_t y = x;
  scratch_.push_back(y);
  while (!is_splay_root(y)) {
    y = nodes_[y].parent;
    scratch_.push_back(y);
  }
  for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) push(*it);

  while (!is_splay_root(x)) {
    std::uint32_t p = nodes_[x].parent;
    if (!is_splay_root(p)) {
      std::uint32_t g = nodes_[p].parent;
      bool zigzig = (nodes_[g].child[1] == p) == (nodes_[p].child[1] == x);
      rotate(zigzig ? p : x);
    }
    rotate(x);
  }
}

void LcForest::access(std::uint32_t x) {
  std::uint32_t last = kNil;
  for (std::uint32_t y = x; y != kNil; y = nodes_[y].parent) {
    ++steps_;
    splay(y);
    nodes_[y].child[1] = last;
    pull(y);
    last = y;
  }
  splay(x);
}

VertexId LcForest::find_root(VertexId v) {
  check_vertex(v);
  access(v);
  std::uint32_t x = v;
  push(x);
  while (nodes_[x].child[0] != kNil) {
    ++steps_;
    x = nodes_[x].child[0];
    push(x);
  }
  splay(x);
  return x;
}

void LcForest::link(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (find_root(u) != u) throw Error(Errc::NotARoot, "vertex " + std::to_string(u));
  if (find_root(v) == u) {
    throw Error(Errc::SameTree, std::to_string(u) + "-" + std::to_string(v));
  }
  access(u);
  nodes_[u].parent = v;
}

void LcForest::cut(VertexId v) {
  check_vertex(v);
  access(v);
  std::uint32_t left = nodes_[v].child[0];
  if (left == kNil) throw Error(Errc::IsRoot, "vertex " + std::to_string(v));
  nodes_[left].parent = kNil;
  nodes_[v].child[0] = kNil;
  pull(v);
}

std::size_t LcForest::path_length(VertexId v) {
  check_vertex(v);
  access(v);
  return nodes_[v].size - 1;
}

void LcForest::evert(VertexId v) {
  check_vertex(v);
  access(v);
  nodes_[v].flip = !nodes_[v].flip;
}

std::optional<VertexId> LcForest::parent(VertexId v) {
  check_vertex(v);
  access(v);
  std::uint32_t x = nodes_[v].child[0];
  if (x == kNil) return std::nullopt;
  push(x);
  while (nodes_[x].child[1] != kNil) {
    x = nodes_[x].child[1];
    push(x);
  }
  splay(x);
  return x;
}

}  // namespace dyncolor
