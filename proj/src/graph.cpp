#include "dyncolor/graph.hpp"

#include <string>

namespace dyncolor {

IndexedAdjacency::IndexedAdjacency(std::size_t n)
    : n_(n), head_(n, kNil), size_(n, 0), locator_(n * n, kNil) {}

void IndexedAdjacency::push(VertexId owner, VertexId target) {
  std::uint32_t rec;
  if (!free_records_.empty()) {
    rec = free_records_.back();
    free_records_.pop_back();
  } else {
    rec = static_cast<std::uint32_t>(records_.size());
    records_.emplace_back();
  }
  std::uint32_t old_head = head_[owner];
  records_[rec] = Record{target, kNil, old_head};
  if (old_head != kNil) records_[old_head].prev = rec;
  head_[owner] = rec;
  locator_[index(owner, target)] = rec;
  ++size_[owner];
}

void IndexedAdjacency::erase(VertexId owner, VertexId target) {
  std::uint32_t& slot = locator_[index(owner, target)];
  std::uint32_t rec = slot;
  const Record& r = records_[rec];
  if (r.prev != kNil) {
    records_[r.prev].next = r.next;
  } else {
    head_[owner] = r.next;
  }
  if (r.next != kNil) records_[r.next].prev = r.prev;
  slot = kNil;
  free_records_.push_back(rec);
  --size_[owner];
}

void DynGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  if (adj_.contains(u, v)) {
    throw Error(Errc::EdgeExists, std::to_string(u) + "-" + std::to_string(v));
  }
  adj_.push(u, v);
  adj_.push(v, u);
  ++edges_;
}

void DynGraph::remove_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adj_.contains(u, v)) {
    throw Error(Errc::EdgeMissing, std::to_string(u) + "-" + std::to_string(v));
  }
  adj_.erase(u, v);
  adj_.erase(v, u);
  --edges_;
}

}  // namespace dyncolor
