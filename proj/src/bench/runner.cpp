#include "dyncolor/bench/runner.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <unordered_set>

#include "dyncolor/error.hpp"
#include "dyncolor/oracle.hpp"
#include "json.hpp"

namespace dyncolor::bench {

namespace {

std::uint64_t key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

// Edges currently present in the engine, kept independently of it.
class LiveEdges {
 public:
  bool contains(VertexId u, VertexId v) const { return index_.count(key(u, v)) != 0; }
  void add(VertexId u, VertexId v) {
    index_[key(u, v)] = edges_.size();
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  void remove(VertexId u, VertexId v) {
    auto it = index_.find(key(u, v));
    std::size_t i = it->second;
    index_.erase(it);
    if (i + 1 != edges_.size()) {
      edges_[i] = edges_.back();
      index_[key(edges_[i].first, edges_[i].second)] = i;
    }
    edges_.pop_back();
  }
  oracle::Snapshot snapshot(std::size_t n) const { return oracle::Snapshot(n, edges_); }

 private:
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

std::string where(const TraceEvent& e, std::size_t index) {
  std::string s = "event " + std::to_string(index);
  if (e.line != 0) s += " (line " + std::to_string(e.line) + ")";
  return s + " " + std::string(to_string(e.kind)) + " " + std::to_string(e.u) +
         (e.kind == EventKind::ColorQuery ? "" : " " + std::to_string(e.v));
}

std::uint64_t percentile(const std::vector<std::uint64_t>& sorted, double q) {
  if (sorted.empty()) return 0;
  auto rank = static_cast<std::size_t>(q * static_cast<double>(sorted.size()));
  return sorted[std::min(rank, sorted.size() - 1)];
}

}  // namespace

TraceShape measure_trace(const Trace& trace) {
  TraceShape shape;
  std::unordered_set<std::uint64_t> live;
  std::unordered_set<std::uint64_t> ever;
  std::vector<std::size_t> degree(trace.n, 0);
  for (const TraceEvent& e : trace.events) {
    if (e.kind == EventKind::Insert && live.insert(key(e.u, e.v)).second) {
      ever.insert(key(e.u, e.v));
      shape.max_degree = std::max({shape.max_degree, ++degree[e.u], ++degree[e.v]});
    } else if (e.kind == EventKind::Delete && live.erase(key(e.u, e.v))) {
      --degree[e.u];
      --degree[e.v];
    }
    shape.max_edges = std::max(shape.max_edges, live.size());
  }

  // Peel minimum-degree vertices of the union graph.
  std::vector<std::vector<VertexId>> adj(trace.n);
  for (std::uint64_t k : ever) {
    auto u = static_cast<VertexId>(k >> 32);
    auto v = static_cast<VertexId>(k & 0xffffffffu);
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::size_t> deg(trace.n);
  std::size_t top = 0;
  for (std::size_t v = 0; v < trace.n; ++v) top = std::max(top, deg[v] = adj[v].size());
  std::vector<std::vector<VertexId>> bucket(top + 1);
  for (VertexId v = 0; v < trace.n; ++v) bucket[deg[v]].push_back(v);
  std::vector<bool> gone(trace.n, false);
  std::size_t d = 0;
  for (std::size_t removed = 0; removed < trace.n;) {
    d = 0;
    while (bucket[d].empty()) ++d;
    VertexId v = bucket[d].back();
    bucket[d].pop_back();
    if (gone[v] || deg[v] != d) continue;
    gone[v] = true;
    ++removed;
    shape.degeneracy = std::max(shape.degeneracy, d);
    for (VertexId w : adj[v]) {
      if (!gone[w]) bucket[--deg[w]].push_back(w);
    }
  }
  return shape;
}

RunReport run(const Trace& trace, const RunOptions& options) {
  TraceShape shape = measure_trace(trace);
  EngineConfig config;
  config.n = trace.n;
  config.mcap = options.mcap ? options.mcap : std::max<std::size_t>(shape.max_edges, 1);
  config.dcap = options.dcap ? options.dcap : std::max<std::size_t>(shape.max_degree, 1);
  config.gamma = options.gamma ? options.gamma : std::max<std::size_t>(shape.degeneracy, 1);
  std::unique_ptr<EngineAdapter> engine = make_engine(options.engine, config);

  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& e = trace.events[i];
    if ((e.kind == EventKind::Delete && !engine->fully_dynamic()) ||
        (e.kind == EventKind::ConnQuery && !engine->supports_conn_query())) {
      throw Error(Errc::UnsupportedEvent, options.engine + ": " + where(e, i));
    }
  }

  RunReport report;
  report.engine = options.engine;
  report.n = trace.n;
  report.mcap = config.mcap;
  report.dcap = config.dcap;
  report.gamma = config.gamma;

  LiveEdges live;
  std::unordered_set<std::uint64_t> rejected;
  std::vector<ColorId> colors(trace.n);
  std::vector<std::uint64_t> times;
  times.reserve(trace.events.size());

  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& e = trace.events[i];
    const std::uint64_t recolor_before = engine->metrics().recolorings;
    bool expect_reject = false;
    if (options.check_oracle && e.kind == EventKind::Insert && engine->bipartite() && e.u != e.v &&
        !live.contains(e.u, e.v)) {
      std::vector<std::uint32_t> depth = oracle::bfs_depths(live.snapshot(trace.n), e.u);
      expect_reject = depth[e.v] != kNil && depth[e.v] % 2 == 0;
    }

    auto start = std::chrono::steady_clock::now();
    try {
      switch (e.kind) {
        case EventKind::Insert:
          ++report.events.insert;
          if (engine->insert(e.u, e.v) == InsertOutcome::Added) {
            if (!live.contains(e.u, e.v)) live.add(e.u, e.v);
            rejected.erase(key(e.u, e.v));
            if (options.check_oracle && expect_reject) {
              throw Error(Errc::ContractViolation, "odd cycle accepted at " + where(e, i));
            }
          } else {
            rejected.insert(key(e.u, e.v));
            if (options.check_oracle && !expect_reject) {
              throw Error(Errc::ContractViolation, "bipartite insert rejected at " + where(e, i));
            }
          }
          break;
        case EventKind::Delete:
          ++report.events.erase;
          if (!live.contains(e.u, e.v) && rejected.erase(key(e.u, e.v))) {
            ++report.rejected_deletes;
            break;
          }
          engine->remove(e.u, e.v);
          live.remove(e.u, e.v);
          break;
        case EventKind::ColorQuery:
          ++report.events.color_query;
          engine->query(e.u);
          break;
        case EventKind::ConnQuery: {
          ++report.events.conn_query;
          bool got = engine->conn_query(e.u, e.v);
          if (options.check_oracle && got != oracle::connected_bfs(live.snapshot(trace.n), e.u, e.v)) {
            throw Error(Errc::ContractViolation, "connectivity answer wrong at " + where(e, i));
          }
          break;
        }
      }
    } catch (const Error& err) {
      if (err.code() == Errc::ContractViolation) throw;
      throw Error(Errc::ContractViolation, where(e, i) + ": " + err.what());
    }
    auto stop = std::chrono::steady_clock::now();
    times.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));

    if (e.is_update()) {
      std::uint64_t spent = engine->metrics().recolorings - recolor_before;
      report.max_recolorings_per_update = std::max(report.max_recolorings_per_update, spent);
      if (e.kind == EventKind::Delete) report.delete_recolorings += spent;
      if (options.check_oracle) {
        for (VertexId v = 0; v < trace.n; ++v) colors[v] = engine->peek(v);
        if (!oracle::proper_check(live.snapshot(trace.n), colors)) {
          throw Error(Errc::ContractViolation, "improper coloring after " + where(e, i));
        }
        ++report.oracle_checks;
      }
    }
  }

  const Metrics& m = engine->metrics();
  report.updates = m.updates;
  report.queries = m.queries;
  report.recolorings = m.recolorings;
  report.observable_flips = m.observable_flips;
  report.distinct_colors_max = m.distinct_colors_max;
  report.rejections = m.rejections;
  report.structural_steps = engine->structural_steps();

  for (std::uint64_t t : times) report.wall_time.total_ns += t;
  std::sort(times.begin(), times.end());
  report.wall_time.p50_ns = percentile(times, 0.50);
  report.wall_time.p90_ns = percentile(times, 0.90);
  report.wall_time.p99_ns = percentile(times, 0.99);
  report.wall_time.max_ns = times.empty() ? 0 : times.back();
  return report;
}

std::string report_to_json(const RunReport& r, bool include_wall_time) {
  nlohmann::ordered_json j;
  j["engine"] = r.engine;
  j["n"] = r.n;
  j["mcap"] = r.mcap;
  j["dcap"] = r.dcap;
  j["gamma"] = r.gamma;
  j["events"] = {{"insert", r.events.insert},
                 {"delete", r.events.erase},
                 {"color_query", r.events.color_query},
                 {"conn_query", r.events.conn_query}};
  j["updates"] = r.updates;
  j["queries"] = r.queries;
  j["recolorings"] = r.recolorings;
  j["max_recolorings_per_update"] = r.max_recolorings_per_update;
  j["delete_recolorings"] = r.delete_recolorings;
  j["observable_flips"] = r.observable_flips;
  j["distinct_colors_max"] = r.distinct_colors_max;
  j["rejections"] = r.rejections;
  j["rejected_deletes"] = r.rejected_deletes;
  j["structural_steps"] = r.structural_steps;
  j["oracle_checks"] = r.oracle_checks;
  if (include_wall_time) {
    j["wall_time"] = {{"total_ns", r.wall_time.total_ns},
                      {"p50_ns", r.wall_time.p50_ns},
                      {"p90_ns", r.wall_time.p90_ns},
                      {"p99_ns", r.wall_time.p99_ns},
                      {"max_ns", r.wall_time.max_ns}};
  }
  return j.dump(2) + "\n";
}

}  // namespace dyncolor::bench
