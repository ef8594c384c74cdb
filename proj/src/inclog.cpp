#include "dyncolor/inclog.hpp"

#include <bit>
#include <string>

#include "dyncolor/error.hpp"

namespace dyncolor {

ColorWord ColorWord::all_set(std::size_t width) {
  if (width == 0 || width > kMaxWidth) {
    throw Error(Errc::CapacityExceeded, "color word width " + std::to_string(width));
  }
  ColorWord w;
  w.width_ = width;
  for (std::size_t p = 0; p < width; ++p) w.bits_[p / 64] |= std::uint64_t{1} << (p % 64);
  return w;
}

std::size_t ColorWord::position(ColorId c) const {
  if (c < 1 || c > width_) throw Error(Errc::PaletteExhausted, "color " + std::to_string(c));
  return width_ - c;
}

bool ColorWord::is_set(ColorId c) const {
  std::size_t p = position(c);
  return (bits_[p / 64] >> (p % 64)) & 1U;
}

void ColorWord::clear(ColorId c) {
  std::size_t p = position(c);
  bits_[p / 64] &= ~(std::uint64_t{1} << (p % 64));
}

void ColorWord::set(ColorId c) {
  std::size_t p = position(c);
  bits_[p / 64] |= std::uint64_t{1} << (p % 64);
}

std::size_t ColorWord::leading_zeros() const {
  // Highest set position, scanning the high word first.
  if (bits_[1] != 0) return width_ - 1 - (127 - std::countl_zero(bits_[1]));
  if (bits_[0] != 0) return width_ - 1 - (63 - std::countl_zero(bits_[0]));
  return width_;
}

ColorWord& ColorWord::operator&=(const ColorWord& other) {
  bits_[0] &= other.bits_[0];
  bits_[1] &= other.bits_[1];
  return *this;
}

ColorId select_free_color(const ColorWord& word) {
  if (word.none()) throw Error(Errc::PaletteExhausted, "no unused color in word");
  return static_cast<ColorId>(word.leading_zeros() + 1);
}

std::size_t log_palette_width(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return 1 + 2 * k;
}

LogColorEngine::LogColorEngine(std::size_t n, bool make_all)
    : width_(log_palette_width(n)),
      dsu_(n),
      color_(n, 1),
      w1_(n),
      w2_(n),
      histogram_(n, log_palette_width(n)) {
  if (make_all) {
    for (VertexId x = 0; x < n; ++x) makeset_explicit(x);
  }
}

void LogColorEngine::makeset_explicit(VertexId x) {
  dsu_.makeset(x);
  color_[x] = 1;
  w1_[x] = ColorWord::all_set(width_);
  w1_[x].clear(1);
  w2_[x] = ColorWord::all_set(width_);
}

ColorId LogColorEngine::color_of(VertexId v) const {
  if (!dsu_.contains(v)) throw Error(Errc::NotPresent, "vertex " + std::to_string(v));
  return color_[v];
}

InsertOutcome LogColorEngine::union_insert(VertexId x, VertexId y) {
  if (x == y) throw Error(Errc::SelfLoop, "vertex " + std::to_string(x));
  std::uint64_t before = dsu_.steps();
  auto [x_root, x_flag] = dsu_.find(x);
  auto [y_root, y_flag] = dsu_.find(y);
  ++metrics_.updates;

  if (x_root == y_root) {
    metrics_.steps += dsu_.steps() - before;
    if (x_flag == y_flag) {
      ++metrics_.rejections;
      return InsertOutcome::Rejected;
    }
    // Earlier merges can leave one color on both sides, so an edge inside a
    // component may still join equal colors.
    if (color_[x] == color_[y]) recolor(x_flag ? x : y, x_root);
    return InsertOutcome::Added;
  }

  // Relative side of the two roots: true iff they end up on the same side.
  bool root_flag = x_flag != y_flag;
  VertexId root = dsu_.union_link(x_root, y_root, root_flag);
  VertexId attached = root == x_root ? y_root : x_root;
  if (root_flag) {
    w1_[root] &= w1_[attached];
    w2_[root] &= w2_[attached];
  } else {
    ColorWord own = w1_[root];
    own &= w2_[attached];
    w2_[root] &= w1_[attached];
    w1_[root] = own;
  }

  if (color_[x] == color_[y]) recolor(dsu_.find(x).flag ? x : y, root);
  metrics_.steps += dsu_.steps() - before;
  return InsertOutcome::Added;
}

// The endpoint on the root's side takes the least color unused opposite.
void LogColorEngine::recolor(VertexId target, VertexId root) {
  ColorId c = select_free_color(w2_[root]);
  histogram_.move(color_[target], c);
  color_[target] = c;
  w1_[root].clear(c);
  ++metrics_.recolorings;
  ++metrics_.observable_flips;
  if (c > max_color_) max_color_ = c;
  if (histogram_.distinct() > metrics_.distinct_colors_max) {
    metrics_.distinct_colors_max = histogram_.distinct();
  }
}

}  // namespace dyncolor
