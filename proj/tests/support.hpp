#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dyncolor/oracle.hpp"
#include "dyncolor/types.hpp"

namespace support {

using dyncolor::VertexId;
using Pair = std::pair<VertexId, VertexId>;

inline Pair norm(VertexId u, VertexId v) { return u < v ? Pair{u, v} : Pair{v, u}; }

inline std::uint32_t draw(std::mt19937& rng, std::uint32_t bound) {
  return std::uniform_int_distribution<std::uint32_t>(0, bound - 1)(rng);
}

// Plain edge-set mirror of a graph.
struct EdgeSet {
  std::size_t n;
  std::set<Pair> edges;

  explicit EdgeSet(std::size_t n) : n(n) {}
  bool has(VertexId u, VertexId v) const { return edges.count(norm(u, v)) != 0; }
  void add(VertexId u, VertexId v) { edges.insert(norm(u, v)); }
  void remove(VertexId u, VertexId v) { edges.erase(norm(u, v)); }
  dyncolor::oracle::Snapshot snapshot() const {
    return dyncolor::oracle::Snapshot(n, {edges.begin(), edges.end()});
  }
  Pair random_edge(std::mt19937& rng) const {
    auto it = edges.begin();
    std::advance(it, draw(rng, static_cast<std::uint32_t>(edges.size())));
    return *it;
  }
};

// Textbook union-find, no parity.
struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Would adding (u, v) close an odd cycle? Computed by BFS parity from u.
inline bool closes_odd_cycle(const EdgeSet& g, VertexId u, VertexId v) {
  auto depth = dyncolor::oracle::bfs_depths(g.snapshot(), u);
  return depth[v] != dyncolor::kNil && depth[v] % 2 == 0;
}

}  // namespace support
