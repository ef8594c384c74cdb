#include <gtest/gtest.h>

#include <random>

#include "dyncolor/bench/generate.hpp"
#include "dyncolor/bench/runner.hpp"
#include "dyncolor/bench/trace.hpp"
#include "dyncolor/error.hpp"
#include "dyncolor/linkcut.hpp"
#include "support.hpp"

using namespace dyncolor;
using namespace dyncolor::bench;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ContractViolation;
}

// Live edge set after replaying the updates of a trace.
support::EdgeSet replay(const Trace& t) {
  support::EdgeSet g(t.n);
  for (const auto& e : t.events) {
    if (e.kind == EventKind::Insert) g.add(e.u, e.v);
    if (e.kind == EventKind::Delete) g.remove(e.u, e.v);
  }
  return g;
}

// Max over all subsets S of |E(S)| / (|S| - 1), rounded up: the exact
// Nash-Williams arboricity for tiny graphs.
std::size_t exact_arboricity(const support::EdgeSet& g) {
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
    std::size_t k = __builtin_popcount(mask);
    if (k < 2) continue;
    std::size_t m = 0;
    for (auto [a, b] : g.edges) m += ((mask >> a) & 1) && ((mask >> b) & 1);
    best = std::max(best, (m + k - 2) / (k - 1));
  }
  return best;
}

}  // namespace

TEST(Trace, ParseExamples) {
  Trace t = parse_trace("N 4\nI 0 1\nC 3\nD 0 1\nK 1 2\n");
  ASSERT_EQ(t.n, 4u);
  ASSERT_EQ(t.events.size(), 4u);
  EXPECT_EQ(t.events[0], TraceEvent::insert(0, 1));
  EXPECT_EQ(t.events[1], TraceEvent::color_query(3));
  EXPECT_EQ(t.events[2], TraceEvent::erase(0, 1));
  EXPECT_EQ(t.events[3], TraceEvent::conn_query(1, 2));
  EXPECT_EQ(t.events[1].line, 3u);
}

TEST(Trace, ParseErrorsCarryLines) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_trace(text);
    } catch (const dyncolor::ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("N 4\nI 0\n"), 2u);
  EXPECT_EQ(line_of("I 0 1\n"), 1u);
  EXPECT_EQ(line_of("N 4\nI 0 9\n"), 2u);
  EXPECT_EQ(line_of("N 4\n\nX 1\n"), 3u);
  EXPECT_EQ(line_of("N 4\nC -1\n"), 2u);
  EXPECT_EQ(line_of("N 4\nN 4\n"), 2u);
  EXPECT_EQ(line_of("# only a comment\n"), 2u);
}

TEST(Trace, RoundTripIsBitExact) {
  const std::string text = "# leading\nN 5\nI 0 1\n# middle\nC 4\nD 0 1\nK 2 3\n# tail\n";
  EXPECT_EQ(format_trace(parse_trace(text)), text);
  Trace g = generate("random-graph(20,30,5,0.3)", 7);
  std::string dumped = format_trace(g);
  EXPECT_EQ(format_trace(parse_trace(dumped)), dumped);
  EXPECT_EQ(parse_trace(dumped), g);
}

TEST(Generate, RandomForestSpansAndIsAcyclic) {
  Trace t = generate("random-forest(8,7)", 1);
  ASSERT_EQ(t.events.size(), 7u);
  support::Dsu dsu(8);
  for (const auto& e : t.events) {
    ASSERT_EQ(e.kind, EventKind::Insert);
    ASSERT_TRUE(dsu.unite(e.u, e.v));
  }
  Trace partial = generate("random-forest(100,40)", 2);
  support::Dsu d2(100);
  for (const auto& e : partial.events) ASSERT_TRUE(d2.unite(e.u, e.v));
}

TEST(Generate, BalancedPathsBuildsOnePath) {
  Trace t = generate("balanced-paths(8)", 3);
  ASSERT_EQ(t.events.size(), 7u);
  support::EdgeSet g = replay(t);
  for (VertexId v = 0; v < 8; ++v) {
    std::size_t d = 0;
    for (VertexId w = 0; w < 8; ++w) d += g.has(v, w);
    EXPECT_LE(d, 2u);
  }
  EXPECT_EQ(oracle::component_sizes(g.snapshot())[0], 8u);
}

TEST(Generate, Deterministic) {
  for (const char* spec : {"random-graph(50,80,6,0.4)", "bounded-arboricity(40,2,0.3)", "random-forest(30,29)",
                           "random-bipartite(30,60,0.5)"}) {
    EXPECT_EQ(generate(spec, 9), generate(spec, 9)) << spec;
    EXPECT_NE(generate(spec, 9), generate(spec, 10)) << spec;
  }
}

TEST(Generate, RandomGraphRespectsCaps) {
  Trace t = generate("random-graph(30,40,4,0.3,2000)", 5);
  support::EdgeSet g(t.n);
  std::vector<std::size_t> deg(t.n, 0);
  for (const auto& e : t.events) {
    if (e.kind == EventKind::Insert) {
      ASSERT_FALSE(g.has(e.u, e.v));
      ASSERT_NE(e.u, e.v);
      g.add(e.u, e.v);
      ASSERT_LE(++deg[e.u], 4u);
      ASSERT_LE(++deg[e.v], 4u);
      ASSERT_LE(g.edges.size(), 40u);
    } else if (e.kind == EventKind::Delete) {
      ASSERT_TRUE(g.has(e.u, e.v));
      g.remove(e.u, e.v);
      --deg[e.u], --deg[e.v];
    }
  }
}

TEST(Generate, BoundedArboricityMeetsNashWilliams) {
  for (std::size_t gamma : {1u, 2u, 3u}) {
    Trace t = generate("bounded-arboricity(12," + std::to_string(gamma) + ",0.2,300)", 11);
    support::EdgeSet g(t.n);
    int checks = 0;
    for (const auto& e : t.events) {
      if (e.kind == EventKind::Insert) g.add(e.u, e.v);
      if (e.kind == EventKind::Delete) g.remove(e.u, e.v);
      if (e.is_update() && ++checks % 25 == 0) {
        ASSERT_LE(exact_arboricity(g), gamma);
      }
    }
  }
}

TEST(Generate, RandomBipartiteStaysBipartite) {
  Trace t = generate("random-bipartite(40,80,0.3,1000)", 13);
  support::EdgeSet g(t.n);
  for (const auto& e : t.events) {
    if (e.kind == EventKind::Insert) g.add(e.u, e.v);
    if (e.kind == EventKind::Delete) g.remove(e.u, e.v);
    if (e.is_update()) {
      ASSERT_TRUE(oracle::is_bipartite(g.snapshot()));
    }
  }
}

TEST(Generate, InvalidSpecs) {
  for (const char* spec : {"nope(3)", "random-forest(8,8)", "random-forest(8)", "balanced-paths(6)",
                           "random-graph(10,5,2,1.5)", "random-graph(10,x,2,0.1)", "random-forest 8,7",
                           "bounded-arboricity(10,0,0.1)", "random-forest(8,7,)"}) {
    EXPECT_EQ(code_of([&] { generate(spec, 1); }), Errc::InvalidSpec) << spec;
  }
}

TEST(Adversary, TraceReplaysToSameTotal) {
  auto result = run_adversary_explicit2(64);
  EXPECT_EQ(result.total_recolorings, 32u * 6u);
  RunReport r = run(result.trace, {.engine = "inc2"});
  EXPECT_EQ(r.recolorings, result.total_recolorings);
  EXPECT_EQ(r.rejections, 0u);
  EXPECT_EQ(code_of([] { run_adversary_explicit2(48); }), Errc::InvalidSpec);
}

TEST(Run, DeleteOnIncrementalEngineIsUnsupported) {
  Trace t = parse_trace("N 3\nI 0 1\nD 0 1\n");
  for (const char* engine : {"inclog", "inc2", "incimp2"}) {
    EXPECT_EQ(code_of([&] { run(t, {.engine = engine}); }), Errc::UnsupportedEvent) << engine;
  }
  Trace k = parse_trace("N 3\nK 0 1\n");
  EXPECT_EQ(code_of([&] { run(k, {.engine = "delta1"}); }), Errc::UnsupportedEvent);
  EXPECT_EQ(code_of([&] { run(k, {.engine = "warp"}); }), Errc::InvalidSpec);
}

TEST(Run, Full2RejectionsMatchOracle) {
  Trace t = generate("random-graph(30,60,8,0.3,1500)", 17);
  RunReport r = run(t, {.engine = "full2", .check_oracle = true});
  // Independent count of odd-cycle inserts.
  support::EdgeSet g(t.n);
  std::set<support::Pair> rejected;
  std::uint64_t odd = 0, skipped = 0;
  for (const auto& e : t.events) {
    if (e.kind == EventKind::Insert) {
      if (support::closes_odd_cycle(g, e.u, e.v)) {
        ++odd;
        rejected.insert(support::norm(e.u, e.v));
      } else {
        g.add(e.u, e.v);
      }
    } else if (e.kind == EventKind::Delete) {
      if (rejected.erase(support::norm(e.u, e.v))) {
        ++skipped;
      } else {
        g.remove(e.u, e.v);
      }
    }
  }
  EXPECT_GT(odd, 0u);
  EXPECT_EQ(r.rejections, odd);
  EXPECT_EQ(r.rejected_deletes, skipped);
  EXPECT_EQ(r.oracle_checks, r.events.insert + r.events.erase);
}

TEST(Run, EveryEngineSurvivesOracleMode) {
  struct Case {
    const char* engine;
    const char* spec;
  };
  for (auto c : {Case{"full2", "random-bipartite(40,80,0.4,800)"}, Case{"inc2", "random-graph(40,80,6,0)"},
                 Case{"inclog", "random-graph(40,80,6,0)"}, Case{"incimp2", "random-forest(40,39)"},
                 Case{"delta1", "random-graph(40,80,6,0.4,800)"},
                 Case{"arb", "bounded-arboricity(40,2,0.3,800)"}}) {
    Trace t = generate(c.spec, 19);
    RunReport r = run(t, {.engine = c.engine, .check_oracle = true});
    EXPECT_EQ(r.oracle_checks, r.events.insert + r.events.erase) << c.engine;
    // full2 may write one root color when a delete splits a component.
    if (std::string(c.engine) != "full2") {
      EXPECT_EQ(r.delete_recolorings, 0u) << c.engine;
    }
  }
}

TEST(Run, ReplayOfDumpedTraceIsIdentical) {
  Trace t = generate("random-graph(40,60,6,0.3,600)", 23);
  Trace back = parse_trace(format_trace(t));
  for (const char* engine : {"full2", "delta1", "arb"}) {
    RunReport a = run(t, {.engine = engine});
    RunReport b = run(back, {.engine = engine});
    EXPECT_EQ(report_to_json(a, false), report_to_json(b, false)) << engine;
  }
}

TEST(Run, MeasureTrace) {
  Trace t = parse_trace("N 5\nI 0 1\nI 0 2\nI 1 2\nD 0 1\nI 3 4\nI 0 3\n");
  TraceShape s = measure_trace(t);
  EXPECT_EQ(s.max_edges, 4u);
  EXPECT_EQ(s.max_degree, 2u);
  EXPECT_EQ(s.degeneracy, 2u);
}
