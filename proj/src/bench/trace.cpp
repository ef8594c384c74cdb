#include "dyncolor/bench/trace.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dyncolor/error.hpp"

namespace dyncolor::bench {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Insert: return "insert";
    case EventKind::Delete: return "delete";
    case EventKind::ColorQuery: return "color_query";
    case EventKind::ConnQuery: return "conn_query";
  }
  return "unknown";
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Trace parse_trace(std::string_view text) {
  Trace trace;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') {
      trace.comments.push_back({trace.events.size(), std::string(line), !have_header});
      continue;
    }
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const std::string_view op = tokens[0];
    if (!have_header) {
      if (op != "N" || tokens.size() != 2) throw ParseError(line_no, "header 'N <n>' must come first");
      trace.n = parse_number(tokens[1], line_no);
      if (trace.n == 0 || trace.n > kNil) throw ParseError(line_no, "vertex count out of range");
      have_header = true;
      continue;
    }

    std::size_t arity;
    EventKind kind;
    if (op == "I") {
      kind = EventKind::Insert, arity = 2;
    } else if (op == "D") {
      kind = EventKind::Delete, arity = 2;
    } else if (op == "C") {
      kind = EventKind::ColorQuery, arity = 1;
    } else if (op == "K") {
      kind = EventKind::ConnQuery, arity = 2;
    } else if (op == "N") {
      throw ParseError(line_no, "duplicate header");
    } else {
      throw ParseError(line_no, "unknown event '" + std::string(op) + "'");
    }
    if (tokens.size() != arity + 1) {
      throw ParseError(line_no, "event '" + std::string(op) + "' takes " + std::to_string(arity) +
                                    " vertex ids");
    }
    VertexId ids[2] = {0, 0};
    for (std::size_t k = 0; k < arity; ++k) {
      std::uint64_t id = parse_number(tokens[k + 1], line_no);
      if (id >= trace.n) {
        throw ParseError(line_no, "vertex " + std::to_string(id) + " out of range for n = " +
                                      std::to_string(trace.n));
      }
      ids[k] = static_cast<VertexId>(id);
    }
    trace.events.push_back({kind, ids[0], ids[1], line_no});
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header 'N <n>'");
  return trace;
}

std::string format_trace(const Trace& trace) {
  std::ostringstream out;
  auto comment = trace.comments.begin();
  auto flush_comments = [&](std::size_t position, bool before_header) {
    while (comment != trace.comments.end() && comment->before_header == before_header &&
           comment->position == position) {
      out << comment->text << '\n';
      ++comment;
    }
  };
  flush_comments(0, true);
  out << "N " << trace.n << '\n';
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    flush_comments(i, false);
    const TraceEvent& e = trace.events[i];
    switch (e.kind) {
      case EventKind::Insert: out << "I " << e.u << ' ' << e.v; break;
      case EventKind::Delete: out << "D " << e.u << ' ' << e.v; break;
      case EventKind::ColorQuery: out << "C " << e.u; break;
      case EventKind::ConnQuery: out << "K " << e.u << ' ' << e.v; break;
    }
    out << '\n';
  }
  flush_comments(trace.events.size(), false);
  // Anything left was out of order; keep it rather than drop it.
  for (; comment != trace.comments.end(); ++comment) out << comment->text << '\n';
  return out.str();
}

Trace read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open trace file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trace(buffer.str());
}

void write_trace_file(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write trace file '" + path + "'");
  out << format_trace(trace);
}

}  // namespace dyncolor::bench
