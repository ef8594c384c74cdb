#include "dyncolor/color_lists.hpp"

namespace dyncolor {

ColorLists::ColorLists(std::size_t n, std::size_t palette, std::size_t lists)
    : palette_(palette),
      lists_(lists),
      nodes_(n * (palette + 1)),
      heads_(n * lists, 0),
      tails_(n * lists, 0),
      sizes_(n * lists, 0) {}

void ColorLists::remove(VertexId v, ColorId c) {
  Node& node = nodes_[index(v, c)];
  if (node.list == kNone) return;
  std::size_t s = slot(v, node.list);
  if (node.prev != 0) {
    nodes_[index(v, node.prev)].next = node.next;
  } else {
    heads_[s] = node.next;
  }
  if (node.next != 0) {
    nodes_[index(v, node.next)].prev = node.prev;
  } else {
    tails_[s] = node.prev;
  }
  --sizes_[s];
  node = Node{};
}

void ColorLists::move_to(VertexId v, ColorId c, std::uint8_t list) {
  remove(v, c);
  Node& node = nodes_[index(v, c)];
  std::size_t s = slot(v, list);
  node.list = list;
  node.prev = tails_[s];
  node.next = 0;
  if (tails_[s] != 0) {
    nodes_[index(v, tails_[s])].next = c;
  } else {
    heads_[s] = c;
  }
  tails_[s] = c;
  ++sizes_[s];
}

}  // namespace dyncolor
