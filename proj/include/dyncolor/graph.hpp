#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

#include "dyncolor/error.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Per-vertex doubly linked lists of target vertices with an n-by-n locator
// table: locator(owner, target) is the record holding `target` in owner's
// list, or kNil. Insertion and removal are O(1); memory is O(n^2).
class IndexedAdjacency {
 public:
  explicit IndexedAdjacency(std::size_t n);

  std::size_t num_vertices() const { return n_; }
  std::size_t size(VertexId owner) const { return size_[owner]; }
  bool contains(VertexId owner, VertexId target) const {
    return locator_[index(owner, target)] != kNil;
  }

  // Preconditions (unchecked): target absent from / present in owner's list.
  void push(VertexId owner, VertexId target);
  void erase(VertexId owner, VertexId target);

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    Iterator() = default;
    Iterator(const IndexedAdjacency* adj, std::uint32_t rec) : adj_(adj), rec_(rec) {}
    VertexId operator*() const { return adj_->records_[rec_].target; }
    Iterator& operator++() {
      rec_ = adj_->records_[rec_].next;
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& o) const { return rec_ == o.rec_; }

   private:
    const IndexedAdjacency* adj_ = nullptr;
    std::uint32_t rec_ = kNil;
  };

  class Range {
   public:
    Range(const IndexedAdjacency* adj, VertexId owner) : adj_(adj), owner_(owner) {}
    Iterator begin() const { return {adj_, adj_->head_[owner_]}; }
    Iterator end() const { return {adj_, kNil}; }

   private:
    const IndexedAdjacency* adj_;
    VertexId owner_;
  };

  Range list(VertexId owner) const { return Range(this, owner); }

 private:
  struct Record {
    VertexId target;
    std::uint32_t prev;
    std::uint32_t next;
  };

  std::size_t index(VertexId owner, VertexId target) const {
    return static_cast<std::size_t>(owner) * n_ + target;
  }

  std::size_t n_;
  std::vector<Record> records_;
  std::vector<std::uint32_t> free_records_;
  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> locator_;
};

// Simple undirected graph on a fixed vertex set [0, n).
class DynGraph {
 public:
  explicit DynGraph(std::size_t n) : adj_(n) {}

  std::size_t num_vertices() const { return adj_.num_vertices(); }
  std::size_t num_edges() const { return edges_; }
  std::size_t degree(VertexId v) const {
    check_vertex(v);
    return adj_.size(v);
  }
  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_.contains(u, v);
  }

  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  IndexedAdjacency::Range neighbors(VertexId v) const {
    check_vertex(v);
    return adj_.list(v);
  }

  void check_vertex(VertexId v) const {
    if (v >= num_vertices()) {
      throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
    }
  }

 private:
  IndexedAdjacency adj_;
  std::size_t edges_ = 0;
};

}  // namespace dyncolor
