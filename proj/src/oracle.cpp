#include "dyncolor/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace dyncolor::oracle {

Snapshot::Snapshot(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
  for (Edge& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.second >= n || e.first == e.second) {
      throw std::invalid_argument("bad snapshot edge " + std::to_string(e.first) + "-" +
                                  std::to_string(e.second));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.first].push_back(e.second);
    adj_[e.second].push_back(e.first);
  }
}

Bipartition bfs_bipartition(const Snapshot& s) {
  const std::size_t n = s.n();
  Bipartition out;
  out.side.assign(n, 0);
  std::vector<std::uint32_t> parent(n, kNil);
  std::vector<std::uint32_t> depth(n, kNil);
  std::deque<VertexId> queue;
  for (VertexId r = 0; r < n; ++r) {
    if (depth[r] != kNil) continue;
    depth[r] = 0;
    queue.push_back(r);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : s.neighbors(x)) {
        if (depth[y] == kNil) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          out.side[y] = static_cast<std::uint8_t>(depth[y] % 2);
          queue.push_back(y);
        } else if (depth[y] % 2 == depth[x] % 2) {
          // Walk both BFS paths up to their meeting point.
          std::vector<VertexId> left{x};
          std::vector<VertexId> right{y};
          while (left.back() != right.back()) {
            if (depth[left.back()] >= depth[right.back()]) {
              left.push_back(parent[left.back()]);
            } else {
              right.push_back(parent[right.back()]);
            }
          }
          // lca .. x, then y .. lca: an odd closed walk.
          out.odd_cycle.assign(left.rbegin(), left.rend());
          out.odd_cycle.insert(out.odd_cycle.end(), right.begin(), right.end());
          out.side.clear();
          return out;
        }
      }
    }
  }
  return out;
}

bool is_bipartite(const Snapshot& s) { return bfs_bipartition(s).bipartite(); }

std::vector<std::uint32_t> bfs_depths(const Snapshot& s, VertexId root) {
  std::vector<std::uint32_t> depth(s.n(), kNil);
  std::deque<VertexId> queue{root};
  depth.at(root) = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : s.neighbors(x)) {
      if (depth[y] == kNil) {
        depth[y] = depth[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return depth;
}

bool connected_bfs(const Snapshot& s, VertexId u, VertexId v) {
  if (v >= s.n()) throw std::out_of_range("vertex " + std::to_string(v));
  return bfs_depths(s, u)[v] != kNil;
}

bool proper_check(const Snapshot& s, const std::vector<ColorId>& colors) {
  if (colors.size() < s.n()) return false;
  for (const auto& [u, v] : s.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

std::vector<std::size_t> component_sizes(const Snapshot& s) {
  const std::size_t n = s.n();
  std::vector<std::size_t> size(n, 0);
  std::vector<VertexId> members;
  for (VertexId r = 0; r < n; ++r) {
    if (size[r] != 0) continue;
    members.assign(1, r);
    size[r] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (VertexId y : s.neighbors(members[i])) {
        if (size[y] == 0) {
          size[y] = 1;
          members.push_back(y);
        }
      }
    }
    for (VertexId x : members) size[x] = members.size();
  }
  return size;
}

}  // namespace dyncolor::oracle
