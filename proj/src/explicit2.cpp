#include "dyncolor/explicit2.hpp"

#include <string>
#include <utility>

#include "dyncolor/error.hpp"

namespace dyncolor {

Explicit2Engine::Explicit2Engine(std::size_t n)
    : color_(n, true),
      comp_(n),
      head_(n),
      size_(n, 1),
      next_(n, kNil),
      prev_(n, kNil),
      flips_(n, 0) {
  for (std::uint32_t v = 0; v < n; ++v) {
    comp_[v] = v;
    head_[v] = v;
  }
}

void Explicit2Engine::check_vertex(VertexId v) const {
  if (v >= color_.size()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
}

bool Explicit2Engine::color_of(VertexId v) const {
  check_vertex(v);
  return color_[v];
}

std::size_t Explicit2Engine::component_size(VertexId v) const {
  check_vertex(v);
  return size_[comp_[v]];
}

InsertOutcome Explicit2Engine::insert(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  std::uint64_t key = u < v ? (std::uint64_t{u} << 32 | v) : (std::uint64_t{v} << 32 | u);
  if (edges_.count(key)) {
    throw Error(Errc::EdgeExists, std::to_string(u) + "-" + std::to_string(v));
  }
  ++metrics_.updates;

  std::uint32_t cu = comp_[u];
  std::uint32_t cv = comp_[v];
  bool same_color = color_[u] == color_[v];
  if (cu == cv && same_color) {
    ++metrics_.rejections;
    return InsertOutcome::Rejected;
  }
  edges_.insert(key);
  metrics_.distinct_colors_max = 2;
  if (cu == cv) return InsertOutcome::Added;

  // Relabel (and possibly flip) the smaller component; ties go to v's side.
  std::uint32_t keep = cu;
  std::uint32_t absorb = cv;
  if (size_[cu] < size_[cv]) std::swap(keep, absorb);

  std::uint32_t last = kNil;
  for (std::uint32_t w = head_[absorb]; w != kNil; w = next_[w]) {
    ++metrics_.steps;
    comp_[w] = keep;
    if (same_color) {
      color_[w] = !color_[w];
      ++flips_[w];
      ++metrics_.recolorings;
      ++metrics_.observable_flips;
    }
    last = w;
  }
  // Splice the absorbed list in front of the kept one.
  next_[last] = head_[keep];
  prev_[head_[keep]] = last;
  head_[keep] = head_[absorb];
  head_[absorb] = kNil;
  size_[keep] += size_[absorb];
  size_[absorb] = 0;
  return InsertOutcome::Added;
}

}  // namespace dyncolor
