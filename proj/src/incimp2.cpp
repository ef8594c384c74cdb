#include "dyncolor/incimp2.hpp"

#include <string>

#include "dyncolor/error.hpp"

namespace dyncolor {

Implicit2Engine::Implicit2Engine(std::size_t n, bool make_all) : dsu_(n) {
  if (make_all) {
    for (VertexId x = 0; x < n; ++x) dsu_.makeset(x);
  }
}

bool Implicit2Engine::color_of(VertexId v) {
  std::uint64_t before = dsu_.steps();
  bool c = dsu_.find(v).flag;
  metrics_.steps += dsu_.steps() - before;
  return c;
}

InsertOutcome Implicit2Engine::insert(VertexId x, VertexId y) {
  if (x == y) throw Error(Errc::SelfLoop, "vertex " + std::to_string(x));
  std::uint64_t before = dsu_.steps();
  auto [x_root, x_color] = dsu_.find(x);
  auto [y_root, y_color] = dsu_.find(y);
  ++metrics_.updates;

  InsertOutcome out = InsertOutcome::Added;
  if (x_root == y_root) {
    if (x_color == y_color) {
      ++metrics_.rejections;
      out = InsertOutcome::Rejected;
    }
  } else {
    VertexId root = dsu_.union_link(x_root, y_root, x_color != y_color);
    VertexId attached = root == x_root ? y_root : x_root;
    metrics_.distinct_colors_max = 2;
    // The attached root's flag write changes its composed color exactly when
    // it lands on the opposite side.
    if (!dsu_.flag(attached)) {
      ++metrics_.recolorings;
      metrics_.observable_flips += dsu_.set_size(attached);
    }
  }
  metrics_.steps += dsu_.steps() - before;
  return out;
}

}  // namespace dyncolor
