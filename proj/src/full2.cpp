#include "dyncolor/full2.hpp"

#include <string>
#include <utility>

#include "dyncolor/error.hpp"

namespace dyncolor {

Full2Engine::Full2Engine(std::size_t n)
    : n_(n), hdt_(n), forest_(n), stored_color_(n, true), degree_(n, 0) {
  if (n < 2) throw Error(Errc::VertexOutOfRange, "need at least the two auxiliary vertices");
}

void Full2Engine::check_vertex(VertexId v) const {
  if (v >= n_) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
}

bool Full2Engine::color_of(VertexId v) {
  check_vertex(v);
  VertexId root = forest_.find_root(v);
  bool odd = forest_.path_length(v) % 2 == 1;
  return stored_color_[root] != odd;
}

bool Full2Engine::get_color(VertexId v) {
  bool c = color_of(v);
  ++metrics_.queries;
  return c;
}

void Full2Engine::write_root_color(VertexId root, bool color) {
  if (stored_color_[root] != color) {
    stored_color_[root] = color;
    ++metrics_.recolorings;
  }
}

void Full2Engine::note_edge_added() {
  // Any edge shows both colors, and no more than two ever exist.
  metrics_.distinct_colors_max = 2;
}

InsertOutcome Full2Engine::insert(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  if (hdt_.has_edge(u, v)) {
    throw Error(Errc::EdgeExists, std::to_string(u) + "-" + std::to_string(v));
  }
  ++metrics_.updates;

  bool cu = color_of(u);
  bool cv = color_of(v);
  bool same_component = hdt_.connected(u, v);
  if (same_component && cu == cv) {
    ++metrics_.rejections;
    return InsertOutcome::Rejected;
  }

  std::size_t moved = same_component ? 0 : hdt_.component_size(u);
  hdt_.insert(u, v);
  if (!same_component) {
    // u's component now hangs below v; it flips as a whole iff cu == cv.
    forest_.evert(u);
    forest_.link(u, v);
    if (cu == cv) metrics_.observable_flips += moved;
  }
  ++degree_[u];
  ++degree_[v];
  note_edge_added();
  return InsertOutcome::Added;
}

void Full2Engine::remove(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (!hdt_.has_edge(u, v)) {
    throw Error(Errc::EdgeMissing, std::to_string(u) + "-" + std::to_string(v));
  }
  ++metrics_.updates;

  DeleteOutcome out = hdt_.remove(u, v);
  --degree_[u];
  --degree_[v];
  if (out.kind == DeleteOutcome::Kind::NonTree) return;

  VertexId child = forest_.path_length(u) > forest_.path_length(v) ? u : v;
  bool child_color = color_of(child);
  forest_.cut(child);

  if (out.kind == DeleteOutcome::Kind::Split) {
    write_root_color(child, child_color);
    return;
  }

  // Reattach the detached subtree through the replacement edge; the old root
  // stays root, so no stored color changes.
  VertexId x = out.x;
  VertexId y = out.y;
  if (forest_.find_root(x) != child) std::swap(x, y);
  forest_.evert(x);
  forest_.link(x, y);
}

bool Full2Engine::connected_via_coloring(VertexId u, VertexId v) {
  if (u >= aux_a()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(u));
  if (v >= aux_a()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  const VertexId a = aux_a();
  const VertexId b = aux_b();
  if (degree_[a] != 0 || degree_[b] != 0) {
    throw Error(Errc::AuxVertexInUse, "auxiliary vertices must be isolated");
  }
  ++metrics_.queries;

  const bool cu = get_color(u);
  const bool cv = get_color(v);
  bool connected;
  if (cu == cv) {
    insert(a, u);
    insert(b, v);
    connected = insert(a, b) == InsertOutcome::Rejected;
    if (!connected) remove(a, b);
    remove(b, v);
    remove(a, u);
  } else {
    insert(a, u);
    connected = insert(a, v) == InsertOutcome::Rejected;
    if (!connected) remove(a, v);
    remove(a, u);
  }

  // Joining two real components through the auxiliary vertices flips one of
  // them; restore it with a single write at its root.
  for (auto [w, before] : {std::pair{u, cu}, std::pair{v, cv}}) {
    if (color_of(w) != before) {
      VertexId root = forest_.find_root(w);
      write_root_color(root, !stored_color_[root]);
      metrics_.observable_flips += hdt_.component_size(w);
    }
  }
  return connected;
}

}  // namespace dyncolor
