#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor {

// Incremental explicit 2-coloring. Components are kept as id-labelled vertex
// lists; when an insert joins two components whose endpoints share a color,
// every vertex of the smaller one is flipped (ties flip v's side). Each vertex
// is flipped at most floor(log2 n) times.
class Explicit2Engine {
 public:
  explicit Explicit2Engine(std::size_t n);

  std::size_t num_vertices() const { return color_.size(); }

  bool get_color(VertexId v) {
    bool c = color_of(v);
    ++metrics_.queries;
    return c;
  }
  bool color_of(VertexId v) const;
  InsertOutcome insert(VertexId u, VertexId v);

  std::size_t component_size(VertexId v) const;
  std::uint32_t flip_count(VertexId v) const { return flips_.at(v); }
  const Metrics& metrics() const { return metrics_; }

 private:
  void check_vertex(VertexId v) const;

  std::vector<bool> color_;
  std::vector<std::uint32_t> comp_;
  // Members of component c form a doubly linked list starting at head_[c].
  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  std::vector<std::uint32_t> flips_;
  std::unordered_set<std::uint64_t> edges_;
  Metrics metrics_;
};

}  // namespace dyncolor
