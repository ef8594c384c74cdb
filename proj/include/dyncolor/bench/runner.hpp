#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "dyncolor/bench/engine.hpp"
#include "dyncolor/bench/trace.hpp"

namespace dyncolor::bench {

struct RunOptions {
  std::string engine;
  // Zero means "derive from the trace": mcap and dcap from a replay of the
  // live edge set, gamma from the degeneracy of all edges ever inserted.
  std::size_t mcap = 0;
  std::size_t dcap = 0;
  std::size_t gamma = 0;
  // Re-validate properness (and, for bipartite engines, each insert outcome)
  // against the brute-force oracles after every update.
  bool check_oracle = false;
};

struct EventCounts {
  std::uint64_t insert = 0;
  std::uint64_t erase = 0;
  std::uint64_t color_query = 0;
  std::uint64_t conn_query = 0;
};

struct WallTime {
  std::uint64_t total_ns = 0;
  std::uint64_t p50_ns = 0;
  std::uint64_t p90_ns = 0;
  std::uint64_t p99_ns = 0;
  std::uint64_t max_ns = 0;
};

struct RunReport {
  std::string engine;
  std::size_t n = 0;
  std::size_t mcap = 0;
  std::size_t dcap = 0;
  std::size_t gamma = 0;
  EventCounts events;
  std::uint64_t updates = 0;
  std::uint64_t queries = 0;
  std::uint64_t recolorings = 0;
  std::uint64_t max_recolorings_per_update = 0;
  std::uint64_t delete_recolorings = 0;
  std::uint64_t observable_flips = 0;
  std::uint64_t distinct_colors_max = 0;
  std::uint64_t rejections = 0;
  // Deletes of edges the engine had rejected; skipped without an engine call.
  std::uint64_t rejected_deletes = 0;
  std::uint64_t structural_steps = 0;
  std::uint64_t oracle_checks = 0;
  WallTime wall_time;
};

// Capacities a trace needs: peak live edge count and peak live degree, and
// the degeneracy of the union of all inserted edges (an arboricity bound).
struct TraceShape {
  std::size_t max_edges = 0;
  std::size_t max_degree = 0;
  std::size_t degeneracy = 0;
};
TraceShape measure_trace(const Trace& trace);

// Throws Error(UnsupportedEvent) when the trace holds events the engine
// cannot serve, Error(ContractViolation) when an engine error or an oracle
// mismatch occurs mid-run.
RunReport run(const Trace& trace, const RunOptions& options);

// Structured-text rendering; wall-time fields are omitted when requested so
// that replays can be compared verbatim.
std::string report_to_json(const RunReport& report, bool include_wall_time = true);

}  // namespace dyncolor::bench
