#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dyncolor/parity_dsu.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Fixed-width bit vector over colors 1..W. Color c lives at bit W - c, so
// color 1 is the most significant bit; a set bit means "unused".
class ColorWord {
 public:
  static constexpr std::size_t kMaxWidth = 128;

  ColorWord() = default;
  static ColorWord all_set(std::size_t width);

  std::size_t width() const { return width_; }
  bool is_set(ColorId c) const;
  void clear(ColorId c);
  void set(ColorId c);
  bool none() const { return bits_[0] == 0 && bits_[1] == 0; }
  // Leading zeros within the first W bit positions.
  std::size_t leading_zeros() const;

  ColorWord& operator&=(const ColorWord& other);
  friend bool operator==(const ColorWord&, const ColorWord&) = default;

 private:
  std::size_t position(ColorId c) const;

  std::array<std::uint64_t, 2> bits_{};
  std::size_t width_ = 0;
};

// Least color whose bit is set, CLZ + 1. Throws PaletteExhausted on an all-zero word.
ColorId select_free_color(const ColorWord& word);

// Palette width 1 + 2 * ceil(log2 n).
std::size_t log_palette_width(std::size_t n);

// Incremental explicit (1 + 2 ceil(log2 n))-coloring of a bipartite graph with
// at most one recoloring per insert. Each root keeps two status words: w1 for
// its own side, w2 for the opposite side.
class LogColorEngine {
 public:
  explicit LogColorEngine(std::size_t n, bool make_all = true);

  std::size_t num_vertices() const { return color_.size(); }
  std::size_t palette_width() const { return width_; }

  void makeset_explicit(VertexId x);
  InsertOutcome union_insert(VertexId x, VertexId y);
  ColorId get_color(VertexId v) {
    ColorId c = color_of(v);
    ++metrics_.queries;
    return c;
  }
  ColorId color_of(VertexId v) const;

  ParityDsu& dsu() { return dsu_; }
  const ColorWord& own_word(VertexId root) const { return w1_.at(root); }
  const ColorWord& opposite_word(VertexId root) const { return w2_.at(root); }
  ColorId max_color() const { return max_color_; }
  const Metrics& metrics() const { return metrics_; }

 private:
  void recolor(VertexId target, VertexId root);

  std::size_t width_;
  ParityDsu dsu_;
  std::vector<ColorId> color_;
  std::vector<ColorWord> w1_;
  std::vector<ColorWord> w2_;
  ColorHistogram histogram_;
  ColorId max_color_ = 1;
  Metrics metrics_;
};

}  // namespace dyncolor
