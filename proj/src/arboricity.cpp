#include "dyncolor/arboricity.hpp"

#include <algorithm>
#include <string>

#include "dyncolor/error.hpp"

namespace dyncolor {

Orientation::Orientation(std::size_t n, std::size_t max_out) : out_(n), max_out_(max_out) {}

Orientation::Inserted Orientation::orient_insert(VertexId u, VertexId v) {
  if (u >= num_vertices() || v >= num_vertices()) {
    throw Error(Errc::VertexOutOfRange, std::to_string(u) + "-" + std::to_string(v));
  }
  if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  if (has_edge(u, v)) throw Error(Errc::EdgeExists, std::to_string(u) + "-" + std::to_string(v));

  Inserted result{u, v, {}};
  if (out_degree(v) < out_degree(u)) std::swap(result.tail, result.head);
  out_.push(result.tail, result.head);
  ++edges_;

  // A graph that admits no small orientation could cycle forever; bail out
  // far beyond any amortized bound instead.
  const std::uint64_t limit = (edges_ + 1) * (num_vertices() + 1) * (max_out_ + 1);
  work_.clear();
  if (out_degree(result.tail) > max_out_) work_.push_back(result.tail);
  while (!work_.empty()) {
    VertexId w = work_.back();
    work_.pop_back();
    if (out_degree(w) <= max_out_) continue;
    targets_.assign(out_.list(w).begin(), out_.list(w).end());
    for (VertexId x : targets_) {
      out_.erase(w, x);
      out_.push(x, w);
      result.flips.push_back({w, x});
      if (out_degree(x) == max_out_ + 1) work_.push_back(x);
    }
    if (result.flips.size() > limit) {
      throw Error(Errc::ContractViolation, "orientation flush does not converge");
    }
  }
  total_flips_ += result.flips.size();
  return result;
}

std::pair<VertexId, VertexId> Orientation::orient_delete(VertexId u, VertexId v) {
  if (u >= num_vertices() || v >= num_vertices()) {
    throw Error(Errc::VertexOutOfRange, std::to_string(u) + "-" + std::to_string(v));
  }
  if (directed(u, v)) {
    out_.erase(u, v);
    --edges_;
    return {u, v};
  }
  if (directed(v, u)) {
    out_.erase(v, u);
    --edges_;
    return {v, u};
  }
  throw Error(Errc::EdgeMissing, std::to_string(u) + "-" + std::to_string(v));
}

ArbEngine::ArbEngine(std::size_t n, std::size_t gamma, std::size_t dcap)
    : gamma_(gamma),
      dcap_(dcap),
      palette_(dcap + 1),
      graph_(n),
      orientation_(n, 4 * gamma),
      color_(n, 1),
      count_(n * (dcap + 2), 0),
      free_(n, dcap + 1, 1),
      mark_(dcap + 2, 0),
      histogram_(n, dcap + 1) {
  if (n == 0 || gamma == 0 || dcap == 0) {
    throw Error(Errc::CapacityExceeded, "n, gamma and dcap must be positive");
  }
  for (VertexId v = 0; v < n; ++v) {
    for (ColorId c = 1; c <= palette_; ++c) free_.move_to(v, c, kFree);
  }
}

void ArbEngine::count_in(VertexId x, ColorId c) {
  ++metrics_.steps;
  if (count_[index(x, c)]++ == 0) free_.remove(x, c);
}

void ArbEngine::count_out(VertexId x, ColorId c) {
  ++metrics_.steps;
  if (--count_[index(x, c)] == 0) free_.move_to(x, c, kFree);
}

void ArbEngine::apply_flips(const std::vector<Reorientation>& flips) {
  for (const Reorientation& f : flips) {
    // f.from was an in-neighbor of f.to; now f.to is an in-neighbor of f.from.
    count_out(f.to, color_[f.from]);
    count_in(f.from, color_[f.to]);
  }
}

void ArbEngine::insert(VertexId u, VertexId v) {
  graph_.check_vertex(u);
  graph_.check_vertex(v);
  if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  if (graph_.has_edge(u, v)) {
    throw Error(Errc::EdgeExists, std::to_string(u) + "-" + std::to_string(v));
  }
  if (graph_.degree(u) + 1 > dcap_ || graph_.degree(v) + 1 > dcap_) {
    throw Error(Errc::CapacityExceeded, "degree budget");
  }
  ++metrics_.updates;

  graph_.add_edge(u, v);
  Orientation::Inserted ins = orientation_.orient_insert(u, v);
  count_in(ins.head, color_[ins.tail]);
  apply_flips(ins.flips);

  if (color_[u] == color_[v]) recolor_low_arb(orientation_.directed(u, v) ? v : u);
}

void ArbEngine::remove(VertexId u, VertexId v) {
  graph_.remove_edge(u, v);
  ++metrics_.updates;
  auto [tail, head] = orientation_.orient_delete(u, v);
  count_out(head, color_[tail]);
}

void ArbEngine::recolor_low_arb(VertexId v) {
  graph_.check_vertex(v);
  const ColorId old = color_[v];
  ++stamp_;
  for (VertexId w : orientation_.out(v)) {
    ++metrics_.steps;
    mark_[color_[w]] = stamp_;
  }
  ColorId c = free_.front(v, kFree);
  while (c != 0 && (c == old || mark_[c] == stamp_)) {
    ++metrics_.steps;
    c = free_.next(v, c);
  }
  if (c == 0) throw Error(Errc::PaletteExhausted, "no free color for vertex " + std::to_string(v));

  color_[v] = c;
  histogram_.move(old, c);
  if (histogram_.distinct() > metrics_.distinct_colors_max) {
    metrics_.distinct_colors_max = histogram_.distinct();
  }
  ++metrics_.recolorings;
  ++metrics_.observable_flips;
  for (VertexId w : orientation_.out(v)) {
    count_out(w, old);
    count_in(w, c);
  }
}

std::string ArbEngine::audit() const {
  const std::size_t n = num_vertices();
  std::vector<std::uint32_t> recount(palette_ + 1);
  for (VertexId v = 0; v < n; ++v) {
    const std::string at = " at vertex " + std::to_string(v);
    std::fill(recount.begin(), recount.end(), 0);
    std::size_t out = 0;
    for (VertexId w : graph_.neighbors(v)) {
      if (color_[w] == color_[v]) return "improper edge" + at;
      bool vw = orientation_.directed(v, w);
      bool wv = orientation_.directed(w, v);
      if (vw == wv) return "edge not oriented exactly once" + at;
      if (wv) ++recount[color_[w]];
      out += vw;
    }
    if (out != orientation_.out_degree(v)) return "OUT list disagrees with graph" + at;
    std::size_t free = 0;
    for (ColorId c = 1; c <= palette_; ++c) {
      if (count_[index(v, c)] != recount[c]) return "COUNT mismatch" + at;
      if (free_.contains(v, c, kFree) != (recount[c] == 0)) {
        return "Free mismatch for color " + std::to_string(c) + at;
      }
      free += recount[c] == 0;
    }
    std::size_t walked = 0;
    for (ColorId c = free_.front(v, kFree); c != 0; c = free_.next(v, c)) {
      if (!free_.contains(v, c, kFree) || ++walked > palette_) return "broken Free list" + at;
    }
    if (walked != free || free_.size(v, kFree) != free) return "Free size mismatch" + at;
  }
  return {};
}

}  // namespace dyncolor
