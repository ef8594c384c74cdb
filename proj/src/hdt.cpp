#include "dyncolor/hdt.hpp"

#include <stdexcept>

#include "dyncolor/error.hpp"

namespace dyncolor {

namespace {

int ceil_log2(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

std::string edge_name(VertexId u, VertexId v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

}  // namespace

HdtConnectivity::HdtConnectivity(std::size_t n) : n_(n), top_(ceil_log2(n)) {
  std::size_t levels = static_cast<std::size_t>(top_) + 1;
  forests_.reserve(levels);
  for (std::size_t i = 0; i < levels; ++i) forests_.emplace_back(n);
  tree_adj_.resize(levels * n);
  nontree_adj_.resize(levels * n);
}

void HdtConnectivity::check_vertex(VertexId v) const {
  if (v >= n_) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
}

std::uint32_t HdtConnectivity::find_edge(VertexId u, VertexId v) const {
  auto it = edge_index_.find(key(u, v));
  return it == edge_index_.end() ? kNil : it->second;
}

bool HdtConnectivity::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return find_edge(u, v) != kNil;
}

bool HdtConnectivity::is_tree_edge(VertexId u, VertexId v) const {
  std::uint32_t e = find_edge(u, v);
  if (e == kNil) throw Error(Errc::EdgeMissing, edge_name(u, v));
  return edges_[e].tree;
}

int HdtConnectivity::level(VertexId u, VertexId v) const {
  std::uint32_t e = find_edge(u, v);
  if (e == kNil) throw Error(Errc::EdgeMissing, edge_name(u, v));
  return edges_[e].level;
}

bool HdtConnectivity::connected(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  return forests_[top_].connected(u, v);
}

std::size_t HdtConnectivity::component_size(VertexId v) {
  check_vertex(v);
  return forests_[top_].tree_size(v);
}

// Adds edge e to both endpoint lists at its level and refreshes flags.
void HdtConnectivity::attach(std::uint32_t e) {
  Edge& edge = edges_[e];
  auto flag = edge.tree ? EulerTourForest::kTreeEdges : EulerTourForest::kNonTreeEdges;
  VertexId ends[2] = {edge.u, edge.v};
  for (int side = 0; side < 2; ++side) {
    auto& l = list(edge.tree, edge.level, ends[side]);
    edge.slot[side] = static_cast<std::uint32_t>(l.size());
    l.push_back(e);
    if (l.size() == 1) forests_[edge.level].set_flag(ends[side], flag, true);
  }
}

void HdtConnectivity::detach(std::uint32_t e) {
  Edge& edge = edges_[e];
  auto flag = edge.tree ? EulerTourForest::kTreeEdges : EulerTourForest::kNonTreeEdges;
  VertexId ends[2] = {edge.u, edge.v};
  for (int side = 0; side < 2; ++side) {
    auto& l = list(edge.tree, edge.level, ends[side]);
    std::uint32_t pos = edge.slot[side];
    std::uint32_t moved = l.back();
    l[pos] = moved;
    if (moved != e) {
      Edge& m = edges_[moved];
      m.slot[m.u == ends[side] ? 0 : 1] = pos;
    }
    l.pop_back();
    if (l.empty()) forests_[edge.level].set_flag(ends[side], flag, false);
  }
}

void HdtConnectivity::link_levels(std::uint32_t e, int from, int to) {
  Edge& edge = edges_[e];
  for (int j = from; j <= to; ++j) {
    edge.arcs[j] = forests_[j].link(edge.u, edge.v);
  }
}

void HdtConnectivity::insert(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  if (find_edge(u, v) != kNil) throw Error(Errc::EdgeExists, edge_name(u, v));

  std::uint32_t e;
  if (!free_edges_.empty()) {
    e = free_edges_.back();
    free_edges_.pop_back();
  } else {
    e = static_cast<std::uint32_t>(edges_.size());
    edges_.emplace_back();
  }
  Edge& edge = edges_[e];
  edge.u = u;
  edge.v = v;
  edge.level = top_;
  edge.tree = !forests_[top_].connected(u, v);
  edge.arcs.assign(static_cast<std::size_t>(top_) + 1, {});
  if (edge.tree) link_levels(e, top_, top_);
  attach(e);
  edge_index_.emplace(key(u, v), e);
}

DeleteOutcome HdtConnectivity::remove(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  std::uint32_t e = find_edge(u, v);
  if (e == kNil) throw Error(Errc::EdgeMissing, edge_name(u, v));

  detach(e);
  edge_index_.erase(key(u, v));
  free_edges_.push_back(e);
  const int start = edges_[e].level;
  if (!edges_[e].tree) return DeleteOutcome::non_tree();

  for (int j = start; j <= top_; ++j) forests_[j].cut(edges_[e].arcs[j]);

  for (int i = start; i <= top_; ++i) {
    EulerTourForest& f = forests_[i];
    VertexId small = f.tree_size(u) <= f.tree_size(v) ? u : v;

    // Push the smaller side's level-i tree edges down so it forms a tree of F_{i-1}.
    while (auto x = f.find_flagged(small, EulerTourForest::kTreeEdges)) {
      auto& l = list(true, i, *x);
      while (!l.empty()) {
        if (i == 0) throw std::logic_error("hdt: tree edge below level 0");
        std::uint32_t t = l.back();
        detach(t);
        edges_[t].level = i - 1;
        link_levels(t, i - 1, i - 1);
        attach(t);
        ++scan_steps_;
      }
    }

    while (auto x = f.find_flagged(small, EulerTourForest::kNonTreeEdges)) {
      auto& l = list(false, i, *x);
      while (!l.empty()) {
        std::uint32_t t = l.back();
        ++scan_steps_;
        Edge& cand = edges_[t];
        VertexId other = cand.u == *x ? cand.v : cand.u;
        detach(t);
        if (f.connected(other, small)) {
          if (i == 0) throw std::logic_error("hdt: non-tree edge below level 0");
          cand.level = i - 1;
          attach(t);
        } else {
          cand.tree = true;
          link_levels(t, i, top_);
          attach(t);
          return DeleteOutcome::replaced(cand.u, cand.v);
        }
      }
    }
  }
  return DeleteOutcome::split();
}

std::vector<std::pair<VertexId, VertexId>> HdtConnectivity::spanning_forest() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [k, e] : edge_index_) {
    if (edges_[e].tree) out.emplace_back(edges_[e].u, edges_[e].v);
  }
  return out;
}

std::string HdtConnectivity::audit() {
  for (const auto& [k, e] : edge_index_) {
    const Edge& edge = edges_[e];
    if (edge.level < 0 || edge.level > top_) {
      return "edge " + edge_name(edge.u, edge.v) + " level out of range";
    }
    for (int j = edge.level; j <= top_; ++j) {
      if (!forests_[j].connected(edge.u, edge.v)) {
        return "edge " + edge_name(edge.u, edge.v) + " endpoints split in F_" +
               std::to_string(j);
      }
    }
    if (edge.tree && edge.level > 0 && forests_[edge.level - 1].connected(edge.u, edge.v)) {
      return "tree edge " + edge_name(edge.u, edge.v) + " redundant below its level";
    }
  }
  for (int i = 0; i <= top_; ++i) {
    for (VertexId v = 0; v < n_; ++v) {
      std::size_t size = forests_[i].tree_size(v);
      if (size > 1 && (size << (top_ - i)) > n_) {
        return "tree of F_" + std::to_string(i) + " has " + std::to_string(size) + " vertices";
      }
      bool has_tree = !list(true, i, v).empty();
      bool has_non = !list(false, i, v).empty();
      if (forests_[i].flag(v, EulerTourForest::kTreeEdges) != has_tree ||
          forests_[i].flag(v, EulerTourForest::kNonTreeEdges) != has_non) {
        return "stale flag at vertex " + std::to_string(v) + " level " + std::to_string(i);
      }
    }
  }
  // Forest F_i must contain exactly the tree edges of level <= i.
  for (int i = 0; i <= top_; ++i) {
    std::size_t expected = 0;
    for (const auto& [k, e] : edge_index_) {
      if (edges_[e].tree && edges_[e].level <= i) ++expected;
    }
    std::vector<bool> seen(n_, false);
    std::size_t actual = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (seen[v]) continue;
      auto verts = forests_[i].tree_vertices(v);
      for (VertexId w : verts) seen[w] = true;
      actual += verts.size() - 1;
    }
    if (expected != actual) {
      return "F_" + std::to_string(i) + " has " + std::to_string(actual) + " edges, expected " +
             std::to_string(expected);
    }
  }
  return {};
}

std::uint64_t HdtConnectivity::steps() const {
  std::uint64_t total = scan_steps_;
  for (const auto& f : forests_) total += f.steps();
  return total;
}

}  // namespace dyncolor
