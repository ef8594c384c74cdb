#include "dyncolor/delta1.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dyncolor/error.hpp"

namespace dyncolor {

namespace {

std::size_t ceil_sqrt(std::size_t x) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(x)));
  while (r * r < x) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= x) --r;
  return r;
}

}  // namespace

DeltaPlusOneEngine::DeltaPlusOneEngine(std::size_t n, std::size_t mcap, std::size_t dcap)
    : mcap_(mcap),
      dcap_(dcap),
      palette_(dcap + 1),
      threshold_(ceil_sqrt(2 * mcap)),
      graph_(n),
      color_(n, 1),
      count_(n * (dcap + 2), 0),
      lists_(n, dcap + 1, 2),
      in_high_(n, false),
      high_next_(n, kNil),
      high_prev_(n, kNil),
      mark_(dcap + 2, 0),
      histogram_(n, dcap + 1) {
  if (n == 0 || mcap == 0 || dcap == 0) {
    throw Error(Errc::CapacityExceeded, "n, mcap and dcap must be positive");
  }
  for (VertexId v = 0; v < n; ++v) {
    for (ColorId c = 1; c <= palette_; ++c) lists_.move_to(v, c, kFree);
  }
}

std::vector<VertexId> DeltaPlusOneEngine::high_vertices() const {
  std::vector<VertexId> out;
  for (VertexId w = high_head_; w != kNil; w = high_next_[w]) out.push_back(w);
  return out;
}

void DeltaPlusOneEngine::count_in(VertexId x, ColorId c) {
  ++metrics_.steps;
  if (count_[index(x, c)]++ == 0) lists_.move_to(x, c, kUsed);
}

void DeltaPlusOneEngine::count_out(VertexId x, ColorId c) {
  ++metrics_.steps;
  if (--count_[index(x, c)] == 0) lists_.move_to(x, c, kFree);
}

void DeltaPlusOneEngine::make_high(VertexId x) {
  in_high_[x] = true;
  high_prev_[x] = kNil;
  high_next_[x] = high_head_;
  if (high_head_ != kNil) high_prev_[high_head_] = x;
  high_head_ = x;
  ++high_count_;
  for (VertexId y : graph_.neighbors(x)) count_in(x, color_[y]);
}

void DeltaPlusOneEngine::make_low(VertexId x) {
  in_high_[x] = false;
  if (high_prev_[x] != kNil) {
    high_next_[high_prev_[x]] = high_next_[x];
  } else {
    high_head_ = high_next_[x];
  }
  if (high_next_[x] != kNil) high_prev_[high_next_[x]] = high_prev_[x];
  --high_count_;
  for (ColorId c = lists_.front(x, kUsed); c != 0;) {
    ColorId next = lists_.next(x, c);
    ++metrics_.steps;
    count_[index(x, c)] = 0;
    lists_.move_to(x, c, kFree);
    c = next;
  }
}

// Bookkeeping on x for a freshly inserted edge (x, y).
void DeltaPlusOneEngine::account_new_neighbor(VertexId x, VertexId y) {
  std::size_t d = graph_.degree(x);
  if (d == threshold_) {
    make_high(x);  // the scan already sees y
  } else if (d > threshold_) {
    count_in(x, color_[y]);
  }
}

void DeltaPlusOneEngine::insert(VertexId u, VertexId v) {
  graph_.check_vertex(u);
  graph_.check_vertex(v);
  if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  if (graph_.has_edge(u, v)) {
    throw Error(Errc::EdgeExists, std::to_string(u) + "-" + std::to_string(v));
  }
  if (graph_.num_edges() + 1 > mcap_) throw Error(Errc::CapacityExceeded, "edge budget");
  if (graph_.degree(u) + 1 > dcap_ || graph_.degree(v) + 1 > dcap_) {
    throw Error(Errc::CapacityExceeded, "degree budget");
  }
  ++metrics_.updates;

  graph_.add_edge(u, v);
  account_new_neighbor(v, u);
  account_new_neighbor(u, v);
  if (color_[u] == color_[v]) recolor(v);
}

void DeltaPlusOneEngine::recolor(VertexId v) {
  const ColorId old = color_[v];
  ColorId c = 0;
  if (in_high_[v]) {
    c = lists_.front(v, kFree);
    ++metrics_.steps;
  } else {
    ++stamp_;
    const std::size_t limit = graph_.degree(v) + 1;
    for (VertexId w : graph_.neighbors(v)) {
      ++metrics_.steps;
      if (color_[w] <= limit) mark_[color_[w]] = stamp_;
    }
    for (ColorId k = 1; k <= limit; ++k) {
      if (mark_[k] != stamp_) {
        c = k;
        break;
      }
    }
  }
  if (c == 0 || c == old) {
    throw Error(Errc::PaletteExhausted, "no free color for vertex " + std::to_string(v));
  }

  color_[v] = c;
  histogram_.move(old, c);
  if (histogram_.distinct() > metrics_.distinct_colors_max) {
    metrics_.distinct_colors_max = histogram_.distinct();
  }
  ++metrics_.recolorings;
  ++metrics_.observable_flips;

  for (VertexId w = high_head_; w != kNil; w = high_next_[w]) {
    ++metrics_.steps;
    if (graph_.has_edge(v, w)) {
      count_out(w, old);
      count_in(w, c);
    }
  }
}

void DeltaPlusOneEngine::remove(VertexId u, VertexId v) {
  graph_.remove_edge(u, v);
  ++metrics_.updates;
  for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
    std::size_t d = graph_.degree(x);
    if (d + 1 == threshold_) {
      make_low(x);
    } else if (d >= threshold_) {
      count_out(x, color_[y]);
    }
  }
}

std::string DeltaPlusOneEngine::audit() const {
  const std::size_t n = num_vertices();
  std::size_t listed = 0;
  for (VertexId w = high_head_; w != kNil; w = high_next_[w]) {
    if (!in_high_[w]) return "L_HIGH holds unmarked vertex " + std::to_string(w);
    ++listed;
  }
  if (listed != high_count_) return "L_HIGH length mismatch";
  if (static_cast<double>(high_count_) > std::sqrt(2.0 * static_cast<double>(mcap_))) {
    return "L_HIGH exceeds sqrt(2 mcap)";
  }

  std::vector<std::uint32_t> recount(palette_ + 1);
  for (VertexId v = 0; v < n; ++v) {
    const std::string at = " at vertex " + std::to_string(v);
    if (in_high_[v] != (graph_.degree(v) >= threshold_)) return "L_HIGH membership wrong" + at;
    std::fill(recount.begin(), recount.end(), 0);
    for (VertexId w : graph_.neighbors(v)) {
      if (color_[w] == color_[v]) return "improper edge" + at;
      if (in_high_[v]) ++recount[color_[w]];
    }
    std::size_t used = 0;
    for (ColorId c = 1; c <= palette_; ++c) {
      if (count_[index(v, c)] != recount[c]) return "COUNT mismatch" + at;
      bool should_use = recount[c] > 0;
      if (lists_.contains(v, c, kUsed) != should_use || lists_.contains(v, c, kFree) == should_use) {
        return "FREE/USED mismatch for color " + std::to_string(c) + at;
      }
      used += should_use;
    }
    if (lists_.size(v, kUsed) != used || lists_.size(v, kFree) != palette_ - used) {
      return "list size mismatch" + at;
    }
    for (std::uint8_t l : {kFree, kUsed}) {
      std::size_t walked = 0;
      for (ColorId c = lists_.front(v, l); c != 0; c = lists_.next(v, c)) {
        if (!lists_.contains(v, c, l) || ++walked > palette_) return "broken list" + at;
      }
      if (walked != lists_.size(v, l)) return "list walk length mismatch" + at;
    }
  }
  return {};
}

}  // namespace dyncolor
