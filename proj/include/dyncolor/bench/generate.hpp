#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dyncolor/bench/trace.hpp"

namespace dyncolor::bench {

// Parsed "kind(a,b,...)". Arguments are kept as text so that both integer
// and fractional parameters (churn) can be read.
struct GenSpec {
  std::string kind;
  std::vector<std::string> args;
};

GenSpec parse_gen_spec(std::string_view spec);

// Kinds:
//   random-forest(n, m)                       m <= n-1 inserts, acyclic
//   random-graph(n, mcap, dcap, churn[, updates])
//   bounded-arboricity(n, gamma, churn[, updates])   union of gamma forests
//   random-bipartite(n, mcap, churn[, updates])      edges across a hidden split
//   balanced-paths(n)                         n a power of two, n-1 inserts
// churn is the probability in [0, 1] that an update deletes a live edge.
// The churned kinds also sprinkle ColorQuery events between updates.
// Throws Error(InvalidSpec) on unknown kinds or bad arguments.
Trace generate(std::string_view spec, std::uint64_t seed);

struct AdversaryResult {
  std::uint64_t total_recolorings = 0;
  Trace trace;
  // Recolorings caused by each merge insert, and the smaller side's size then.
  std::vector<std::uint64_t> per_merge;
  std::vector<std::uint64_t> smaller_side;
};

// Adaptive tournament against the explicit 2-coloring engine: paths of equal
// length are joined at endpoints whose current colors agree, forcing the
// engine to flip one whole path. n must be a power of two.
AdversaryResult run_adversary_explicit2(std::size_t n);

// mt19937_64 with its own bounded draws, so traces do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dyncolor::bench
