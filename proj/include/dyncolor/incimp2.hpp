#pragma once

#include <cstddef>

#include "dyncolor/parity_dsu.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Incremental implicit 2-coloring: a vertex's color is its parity flag
// relative to its union-find root, whose color is always true.
class Implicit2Engine {
 public:
  explicit Implicit2Engine(std::size_t n, bool make_all = true);

  std::size_t num_vertices() const { return dsu_.capacity(); }

  void makeset_implicit(VertexId x) { dsu_.makeset(x); }
  InsertOutcome insert(VertexId x, VertexId y);
  bool get_color(VertexId v) {
    bool c = color_of(v);
    ++metrics_.queries;
    return c;
  }
  bool color_of(VertexId v);

  ParityDsu& dsu() { return dsu_; }
  const Metrics& metrics() const { return metrics_; }

 private:
  ParityDsu dsu_;
  Metrics metrics_;
};

}  // namespace dyncolor
