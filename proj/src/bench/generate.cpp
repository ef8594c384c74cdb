#include "dyncolor/bench/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "dyncolor/error.hpp"
#include "dyncolor/explicit2.hpp"
#include "dyncolor/linkcut.hpp"

namespace dyncolor::bench {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::InvalidSpec, "empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace {

constexpr double kQueryRate = 0.25;
constexpr int kInsertAttempts = 64;

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::uint64_t arg_int(const GenSpec& g, std::size_t i, std::string_view what) {
  const std::string& a = g.args.at(i);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), value);
  if (ec != std::errc() || ptr != a.data() + a.size()) {
    throw Error(Errc::InvalidSpec, g.kind + ": " + std::string(what) + " must be an integer, got '" + a + "'");
  }
  return value;
}

double arg_prob(const GenSpec& g, std::size_t i, std::string_view what) {
  const std::string& a = g.args.at(i);
  std::size_t used = 0;
  double value = -1;
  try {
    value = std::stod(a, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != a.size() || !(value >= 0.0 && value <= 1.0)) {
    throw Error(Errc::InvalidSpec, g.kind + ": " + std::string(what) + " must lie in [0, 1], got '" + a + "'");
  }
  return value;
}

void require_arity(const GenSpec& g, std::size_t lo, std::size_t hi) {
  if (g.args.size() < lo || g.args.size() > hi) {
    throw Error(Errc::InvalidSpec, g.kind + ": expected " + std::to_string(lo) +
                                       (lo == hi ? "" : "-" + std::to_string(hi)) + " arguments");
  }
}

void require_n(const GenSpec& g, std::uint64_t n, std::uint64_t min) {
  if (n < min || n >= kNil) {
    throw Error(Errc::InvalidSpec, g.kind + ": n must be at least " + std::to_string(min));
  }
}

std::uint64_t key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

// Live edge set with O(1) membership, insertion and uniform removal.
class EdgePool {
 public:
  struct Entry {
    VertexId u;
    VertexId v;
    std::uint32_t tag;
  };

  explicit EdgePool(std::size_t n) : degree_(n, 0) {}

  std::size_t size() const { return entries_.size(); }
  bool contains(VertexId u, VertexId v) const { return index_.count(key(u, v)) != 0; }
  std::size_t degree(VertexId v) const { return degree_[v]; }

  void add(VertexId u, VertexId v, std::uint32_t tag = 0) {
    index_[key(u, v)] = entries_.size();
    entries_.push_back({u, v, tag});
    ++degree_[u];
    ++degree_[v];
  }

  Entry take_random(Rng& rng) {
    std::size_t i = rng.below(entries_.size());
    Entry e = entries_[i];
    index_.erase(key(e.u, e.v));
    if (i + 1 != entries_.size()) {
      entries_[i] = entries_.back();
      index_[key(entries_[i].u, entries_[i].v)] = i;
    }
    entries_.pop_back();
    --degree_[e.u];
    --degree_[e.v];
    return e;
  }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> degree_;
};

void maybe_query(Trace& t, Rng& rng) {
  if (rng.chance(kQueryRate)) t.events.push_back(TraceEvent::color_query(rng.below(t.n)));
}

std::vector<VertexId> permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> p(n);
  for (VertexId i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

Trace random_forest(const GenSpec& g, Rng& rng) {
  require_arity(g, 2, 2);
  std::uint64_t n = arg_int(g, 0, "n");
  std::uint64_t m = arg_int(g, 1, "m");
  require_n(g, n, 1);
  if (m > n - 1) throw Error(Errc::InvalidSpec, "random-forest: m must be at most n-1");

  // Random recursive tree over a random labeling, then a random subset of
  // its edges in random order.
  std::vector<VertexId> p = permutation(n, rng);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    VertexId a = p[i];
    VertexId b = p[rng.below(i)];
    if (rng.chance(0.5)) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);
  Trace t;
  t.n = n;
  for (std::size_t i = 0; i < m; ++i) t.events.push_back(TraceEvent::insert(edges[i].first, edges[i].second));
  return t;
}

// Shared driver for the churned generators. `propose` fills (u, v) with a
// candidate insert and returns false if it cannot find one.
template <class Propose, class OnDelete>
Trace churn_driver(std::size_t n, std::size_t mcap, double churn, std::uint64_t updates, Rng& rng,
                   EdgePool& pool, Propose propose, OnDelete on_delete) {
  Trace t;
  t.n = n;
  for (std::uint64_t step = 0; step < updates; ++step) {
    bool want_delete = pool.size() > 0 && (pool.size() >= mcap || rng.chance(churn));
    if (!want_delete) {
      VertexId u = 0;
      VertexId v = 0;
      std::uint32_t tag = 0;
      bool found = false;
      for (int attempt = 0; attempt < kInsertAttempts && !found; ++attempt) {
        found = propose(u, v, tag);
      }
      if (found) {
        pool.add(u, v, tag);
        t.events.push_back(TraceEvent::insert(u, v));
        maybe_query(t, rng);
        continue;
      }
      if (pool.size() == 0 || churn == 0.0) break;
    }
    if (churn == 0.0) break;
    EdgePool::Entry e = pool.take_random(rng);
    on_delete(e);
    t.events.push_back(TraceEvent::erase(e.u, e.v));
    maybe_query(t, rng);
  }
  return t;
}

std::uint64_t default_updates(std::uint64_t cap, double churn) { return churn > 0 ? 4 * cap : cap; }

Trace random_graph(const GenSpec& g, Rng& rng) {
  require_arity(g, 4, 5);
  std::uint64_t n = arg_int(g, 0, "n");
  std::uint64_t mcap = arg_int(g, 1, "mcap");
  std::uint64_t dcap = arg_int(g, 2, "dcap");
  double churn = arg_prob(g, 3, "churn");
  require_n(g, n, 2);
  if (mcap == 0 || dcap == 0) throw Error(Errc::InvalidSpec, "random-graph: mcap and dcap must be positive");
  std::uint64_t updates = g.args.size() > 4 ? arg_int(g, 4, "updates") : default_updates(mcap, churn);

  EdgePool pool(n);
  auto propose = [&](VertexId& u, VertexId& v, std::uint32_t&) {
    u = rng.below(n);
    v = rng.below(n);
    return u != v && !pool.contains(u, v) && pool.degree(u) < dcap && pool.degree(v) < dcap;
  };
  return churn_driver(n, mcap, churn, updates, rng, pool, propose, [](const EdgePool::Entry&) {});
}

Trace random_bipartite(const GenSpec& g, Rng& rng) {
  require_arity(g, 3, 4);
  std::uint64_t n = arg_int(g, 0, "n");
  std::uint64_t mcap = arg_int(g, 1, "mcap");
  double churn = arg_prob(g, 2, "churn");
  require_n(g, n, 2);
  if (mcap == 0) throw Error(Errc::InvalidSpec, "random-bipartite: mcap must be positive");
  std::uint64_t updates = g.args.size() > 3 ? arg_int(g, 3, "updates") : default_updates(mcap, churn);

  std::vector<std::uint8_t> side(n);
  for (auto& s : side) s = static_cast<std::uint8_t>(rng.below(2));
  EdgePool pool(n);
  auto propose = [&](VertexId& u, VertexId& v, std::uint32_t&) {
    u = rng.below(n);
    v = rng.below(n);
    return side[u] != side[v] && !pool.contains(u, v);
  };
  return churn_driver(n, mcap, churn, updates, rng, pool, propose, [](const EdgePool::Entry&) {});
}

Trace bounded_arboricity(const GenSpec& g, Rng& rng) {
  require_arity(g, 3, 4);
  std::uint64_t n = arg_int(g, 0, "n");
  std::uint64_t gamma = arg_int(g, 1, "gamma");
  double churn = arg_prob(g, 2, "churn");
  require_n(g, n, 2);
  if (gamma == 0 || gamma > 64) throw Error(Errc::InvalidSpec, "bounded-arboricity: gamma must be in [1, 64]");
  std::uint64_t cap = gamma * (n - 1);
  std::uint64_t updates = g.args.size() > 3 ? arg_int(g, 3, "updates") : default_updates(cap, churn);

  std::vector<LcForest> forests;
  for (std::uint64_t i = 0; i < gamma; ++i) forests.emplace_back(n);
  EdgePool pool(n);
  auto propose = [&](VertexId& u, VertexId& v, std::uint32_t& tag) {
    tag = static_cast<std::uint32_t>(rng.below(gamma));
    u = rng.below(n);
    v = rng.below(n);
    LcForest& f = forests[tag];
    if (u == v || pool.contains(u, v) || f.connected(u, v)) return false;
    f.evert(u);
    f.link(u, v);
    return true;
  };
  auto on_delete = [&](const EdgePool::Entry& e) {
    LcForest& f = forests[e.tag];
    f.evert(e.u);
    f.cut(e.v);
  };
  return churn_driver(n, cap, churn, updates, rng, pool, propose, on_delete);
}

bool power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

Trace balanced_paths(const GenSpec& g, Rng& rng) {
  require_arity(g, 1, 1);
  std::uint64_t n = arg_int(g, 0, "n");
  require_n(g, n, 1);
  if (!power_of_two(n)) throw Error(Errc::InvalidSpec, "balanced-paths: n must be a power of two");

  std::vector<std::pair<VertexId, VertexId>> paths;  // (head, tail)
  for (VertexId v : permutation(n, rng)) paths.emplace_back(v, v);
  Trace t;
  t.n = n;
  while (paths.size() > 1) {
    std::vector<std::pair<VertexId, VertexId>> next;
    for (std::size_t i = 0; i + 1 < paths.size(); i += 2) {
      t.events.push_back(TraceEvent::insert(paths[i].second, paths[i + 1].first));
      next.emplace_back(paths[i].first, paths[i + 1].second);
    }
    paths = std::move(next);
  }
  return t;
}

}  // namespace

GenSpec parse_gen_spec(std::string_view spec) {
  spec = trim(spec);
  std::size_t open = spec.find('(');
  if (open == std::string_view::npos || spec.back() != ')') {
    throw Error(Errc::InvalidSpec, "expected kind(args...), got '" + std::string(spec) + "'");
  }
  GenSpec g;
  g.kind = std::string(trim(spec.substr(0, open)));
  std::string_view body = spec.substr(open + 1, spec.size() - open - 2);
  while (!trim(body).empty()) {
    std::size_t comma = body.find(',');
    std::string_view arg = trim(body.substr(0, comma));
    if (arg.empty()) throw Error(Errc::InvalidSpec, "empty argument in '" + std::string(spec) + "'");
    g.args.emplace_back(arg);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (trim(body).empty()) throw Error(Errc::InvalidSpec, "trailing comma in '" + std::string(spec) + "'");
  }
  return g;
}

Trace generate(std::string_view spec, std::uint64_t seed) {
  GenSpec g = parse_gen_spec(spec);
  Rng rng(seed);
  Trace t;
  if (g.kind == "random-forest") {
    t = random_forest(g, rng);
  } else if (g.kind == "random-graph") {
    t = random_graph(g, rng);
  } else if (g.kind == "bounded-arboricity") {
    t = bounded_arboricity(g, rng);
  } else if (g.kind == "random-bipartite") {
    t = random_bipartite(g, rng);
  } else if (g.kind == "balanced-paths") {
    t = balanced_paths(g, rng);
  } else {
    throw Error(Errc::InvalidSpec, "unknown generator '" + g.kind + "'");
  }
  t.comments.push_back({0, "# gen " + std::string(trim(spec)) + " seed " + std::to_string(seed), true});
  return t;
}

AdversaryResult run_adversary_explicit2(std::size_t n) {
  if (!power_of_two(n) || n >= kNil) throw Error(Errc::InvalidSpec, "adversary: n must be a power of two");
  Explicit2Engine engine(n);
  AdversaryResult result;
  result.trace.n = n;
  auto& events = result.trace.events;

  struct Path {
    VertexId head;
    VertexId tail;
    std::size_t size;
  };
  auto other_end = [](const Path& p, VertexId x) { return x == p.head ? p.tail : p.head; };

  std::vector<Path> pool;
  for (VertexId v = 0; v < n; ++v) pool.push_back({v, v, 1});
  while (pool.size() > 1) {
    std::vector<Path> next;
    for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
      const Path& p = pool[i];
      const Path& q = pool[i + 1];
      VertexId ends[4] = {p.tail, p.head, q.head, q.tail};
      bool colors[4];
      for (int k = 0; k < 4; ++k) {
        colors[k] = engine.get_color(ends[k]);
        events.push_back(TraceEvent::color_query(ends[k]));
      }
      VertexId x = kNil;
      VertexId y = kNil;
      for (int a = 0; a < 2 && x == kNil; ++a) {
        for (int b = 2; b < 4 && x == kNil; ++b) {
          if (colors[a] == colors[b]) {
            x = ends[a];
            y = ends[b];
          }
        }
      }
      if (x == kNil) throw Error(Errc::ContractViolation, "adversary found no same-colored endpoints");

      std::uint64_t before = engine.metrics().recolorings;
      if (engine.insert(x, y) != InsertOutcome::Added) {
        throw Error(Errc::ContractViolation, "adversary merge was rejected");
      }
      events.push_back(TraceEvent::insert(x, y));
      std::uint64_t spent = engine.metrics().recolorings - before;
      result.per_merge.push_back(spent);
      result.smaller_side.push_back(std::min(p.size, q.size));
      result.total_recolorings += spent;
      next.push_back({other_end(p, x), other_end(q, y), p.size + q.size});
    }
    pool = std::move(next);
  }
  return result;
}

}  // namespace dyncolor::bench
