#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor {

// For each vertex, a set of disjoint doubly linked lists over the palette
// [1, palette]. Every (vertex, color) node belongs to at most one list; the
// node array doubles as the per-list locator, so membership tests and moves
// are O(1). Lists start empty.
class ColorLists {
 public:
  static constexpr std::uint8_t kNone = 0xff;

  ColorLists(std::size_t n, std::size_t palette, std::size_t lists);

  std::size_t palette() const { return palette_; }

  std::uint8_t list_of(VertexId v, ColorId c) const { return nodes_[index(v, c)].list; }
  bool contains(VertexId v, ColorId c, std::uint8_t list) const { return list_of(v, c) == list; }
  std::size_t size(VertexId v, std::uint8_t list) const { return sizes_[slot(v, list)]; }

  // Appends c at the back of `list` after unlinking it from its current list.
  void move_to(VertexId v, ColorId c, std::uint8_t list);
  void remove(VertexId v, ColorId c);

  ColorId front(VertexId v, std::uint8_t list) const { return heads_[slot(v, list)]; }
  ColorId next(VertexId v, ColorId c) const { return nodes_[index(v, c)].next; }

 private:
  struct Node {
    ColorId prev = 0;
    ColorId next = 0;
    std::uint8_t list = kNone;
  };

  std::size_t index(VertexId v, ColorId c) const { return static_cast<std::size_t>(v) * (palette_ + 1) + c; }
  std::size_t slot(VertexId v, std::uint8_t list) const { return static_cast<std::size_t>(v) * lists_ + list; }

  std::size_t palette_;
  std::size_t lists_;
  std::vector<Node> nodes_;
  // Color 0 terminates every list.
  std::vector<ColorId> heads_;
  std::vector<ColorId> tails_;
  std::vector<std::uint32_t> sizes_;
};

}  // namespace dyncolor
