#include "dyncolor/euler_tour.hpp"

#include <utility>

namespace dyncolor {

EulerTourForest::EulerTourForest(std::size_t n) : n_(n), nodes_(n) {
  for (auto& node : nodes_) node.loops = 1;
}

void EulerTourForest::pull(std::uint32_t x) {
  Node& n = nodes_[x];
  n.count = 1;
  n.loops = is_loop(x) ? 1 : 0;
  n.agg = n.own;
  for (std::uint32_t c : {n.left, n.right}) {
    if (c == kNil) continue;
    n.count += nodes_[c].count;
    n.loops += nodes_[c].loops;
    n.agg |= nodes_[c].agg;
  }
}

void EulerTourForest::rotate(std::uint32_t x) {
  ++steps_;
  std::uint32_t p = nodes_[x].parent;
  std::uint32_t g = nodes_[p].parent;
  if (nodes_[p].left == x) {
    std::uint32_t b = nodes_[x].right;
    nodes_[p].left = b;
    if (b != kNil) nodes_[b].parent = p;
    nodes_[x].right = p;
  } else {
    std::uint32_t b = nodes_[x].left;
    nodes_[p].right = b;
    if (b != kNil) nodes_[b].parent = p;
    nodes_[x].left = p;
  }
  nodes_[p].parent = x;
  nodes_[x].parent = g;
  if (g != kNil) {
    if (nodes_[g].left == p) {
      nodes_[g].left = x;
    } else {
      nodes_[g].right = x;
    }
  }
  pull(p);
  pull(x);
}

void EulerTourForest::splay(std::uint32_t x) {
  while (nodes_[x].parent != kNil) {
    std::uint32_t p = nodes_[x].parent;
    std::uint32_t g = nodes_[p].parent;
    if (g != kNil) {
      bool zigzig = (nodes_[g].left == p) == (nodes_[p].left == x);
      rotate(zigzig ? p : x);
    }
    rotate(x);
  }
}

std::uint32_t EulerTourForest::leftmost(std::uint32_t x) {
  while (nodes_[x].left != kNil) {
    ++steps_;
    x = nodes_[x].left;
  }
  splay(x);
  return x;
}

std::uint32_t EulerTourForest::rightmost(std::uint32_t x) {
  while (nodes_[x].right != kNil) {
    ++steps_;
    x = nodes_[x].right;
  }
  splay(x);
  return x;
}

// Concatenates two splay roots (either may be kNil); returns the new root.
std::uint32_t EulerTourForest::join(std::uint32_t a, std::uint32_t b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  std::uint32_t last = rightmost(a);
  nodes_[last].right = b;
  nodes_[b].parent = last;
  pull(last);
  return last;
}

// Rotates v's tour so that it starts at v's loop node; returns the root.
std::uint32_t EulerTourForest::reroot(VertexId v) {
  splay(v);
  std::uint32_t before = nodes_[v].left;
  if (before == kNil) return v;
  nodes_[before].parent = kNil;
  nodes_[v].left = kNil;
  pull(v);
  return join(v, before);
}

std::uint32_t EulerTourForest::new_arc() {
  std::uint32_t x;
  if (!free_arcs_.empty()) {
    x = free_arcs_.back();
    free_arcs_.pop_back();
    nodes_[x] = Node{};
  } else {
    x = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
  }
  return x;
}

std::size_t EulerTourForest::position(std::uint32_t x) {
  splay(x);
  std::uint32_t l = nodes_[x].left;
  return l == kNil ? 0 : nodes_[l].count;
}

bool EulerTourForest::connected(VertexId u, VertexId v) {
  if (u == v) return true;
  splay(u);
  splay(v);
  // If u shares v's tree it is no longer a splay root.
  return nodes_[u].parent != kNil;
}

std::size_t EulerTourForest::tree_size(VertexId v) {
  splay(v);
  return nodes_[v].loops;
}

EulerTourForest::ArcPair EulerTourForest::link(VertexId u, VertexId v) {
  std::uint32_t tu = reroot(u);
  std::uint32_t tv = reroot(v);
  ArcPair arcs{new_arc(), new_arc()};
  std::uint32_t t = join(tu, arcs.forward);
  t = join(t, tv);
  join(t, arcs.backward);
  return arcs;
}

void EulerTourForest::cut(ArcPair arcs) {
  std::uint32_t a = arcs.forward;
  std::uint32_t b = arcs.backward;
  if (position(a) > position(b)) std::swap(a, b);
  // Tour = L a M b R; M is one tree, L R the other.
  splay(a);
  std::uint32_t left = nodes_[a].left;
  std::uint32_t rest = nodes_[a].right;
  if (left != kNil) nodes_[left].parent = kNil;
  if (rest != kNil) nodes_[rest].parent = kNil;
  splay(b);
  std::uint32_t middle = nodes_[b].left;
  std::uint32_t right = nodes_[b].right;
  if (middle != kNil) nodes_[middle].parent = kNil;
  if (right != kNil) nodes_[right].parent = kNil;
  join(left, right);
  free_arcs_.push_back(a);
  free_arcs_.push_back(b);
  nodes_[a] = Node{};
  nodes_[b] = Node{};
}

void EulerTourForest::set_flag(VertexId v, Flag flag, bool on) {
  splay(v);
  Node& n = nodes_[v];
  if (on) {
    n.own |= flag;
  } else {
    n.own &= static_cast<std::uint8_t>(~flag);
  }
  pull(v);
}

std::optional<VertexId> EulerTourForest::find_flagged(VertexId v, Flag flag) {
  splay(v);
  if ((nodes_[v].agg & flag) == 0) return std::nullopt;
  std::uint32_t x = v;
  for (;;) {
    ++steps_;
    const Node& n = nodes_[x];
    if (n.left != kNil && (nodes_[n.left].agg & flag)) {
      x = n.left;
    } else if (n.own & flag) {
      break;
    } else {
      x = n.right;
    }
  }
  splay(x);
  return x;
}

std::vector<VertexId> EulerTourForest::tree_vertices(VertexId v) {
  splay(v);
  std::vector<VertexId> out;
  std::vector<std::uint32_t> stack;
  std::uint32_t x = v;
  while (x != kNil || !stack.empty()) {
    while (x != kNil) {
      stack.push_back(x);
      x = nodes_[x].left;
    }
    x = stack.back();
    stack.pop_back();
    if (is_loop(x)) out.push_back(x);
    x = nodes_[x].right;
  }
  return out;
}

}  // namespace dyncolor
