#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor::bench {

enum class EventKind { Insert, Delete, ColorQuery, ConnQuery };

std::string_view to_string(EventKind kind);

struct TraceEvent {
  EventKind kind;
  VertexId u;
  VertexId v = 0;  // unused by ColorQuery
  // 1-based source line, 0 when the event was not parsed from text.
  std::size_t line = 0;

  static TraceEvent insert(VertexId u, VertexId v) { return {EventKind::Insert, u, v}; }
  static TraceEvent erase(VertexId u, VertexId v) { return {EventKind::Delete, u, v}; }
  static TraceEvent color_query(VertexId u) { return {EventKind::ColorQuery, u}; }
  static TraceEvent conn_query(VertexId u, VertexId v) { return {EventKind::ConnQuery, u, v}; }

  bool is_update() const { return kind == EventKind::Insert || kind == EventKind::Delete; }
  // Line numbers are provenance, not content.
  friend bool operator==(const TraceEvent& a, const TraceEvent& b) {
    return a.kind == b.kind && a.u == b.u && a.v == b.v;
  }
};

// A comment line and the number of events that precede it.
struct TraceComment {
  std::size_t position;
  std::string text;  // includes the leading '#'
  bool before_header = false;
  friend bool operator==(const TraceComment&, const TraceComment&) = default;
};

struct Trace {
  std::size_t n = 0;
  std::vector<TraceEvent> events;
  std::vector<TraceComment> comments;

  friend bool operator==(const Trace&, const Trace&) = default;
};

// Line format: optional '#' comment lines, then `N <n>`, then one of
// `I u v`, `D u v`, `C u`, `K u v` per line. Blank lines are skipped.
Trace parse_trace(std::string_view text);
// Canonical text: single spaces, '\n' after every line, comments in place.
// For canonical input, format_trace(parse_trace(text)) == text.
std::string format_trace(const Trace& trace);

Trace read_trace_file(const std::string& path);
void write_trace_file(const std::string& path, const Trace& trace);

}  // namespace dyncolor::bench
