#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace dyncolor {

using VertexId = std::uint32_t;
using ColorId = std::uint32_t;

inline constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

enum class InsertOutcome { Added, Rejected };

// Counters shared by every engine. All fields only grow within a run.
struct Metrics {
  std::uint64_t updates = 0;
  std::uint64_t queries = 0;
  // Writes that change a stored per-vertex color value.
  std::uint64_t recolorings = 0;
  // Vertices whose observable color changed; equals recolorings for explicit engines.
  std::uint64_t observable_flips = 0;
  std::uint64_t distinct_colors_max = 1;
  std::uint64_t rejections = 0;
  // Elementary structural operations (rotations, parent-chain steps, list touches).
  std::uint64_t steps = 0;
};

// Per-color occupancy counts, used by explicit engines to track distinct_colors_max.
class ColorHistogram {
 public:
  ColorHistogram(std::size_t n, std::size_t palette) : count_(palette + 1, 0) {
    if (n > 0) {
      count_.at(1) = n;
      distinct_ = 1;
    }
  }

  void move(ColorId from, ColorId to) {
    if (--count_[from] == 0) --distinct_;
    if (count_[to]++ == 0) ++distinct_;
  }

  std::uint64_t distinct() const { return distinct_; }

 private:
  std::vector<std::uint64_t> count_;
  std::uint64_t distinct_ = 0;
};

}  // namespace dyncolor
