#pragma once

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "semitotal/error.hpp"
#include "semitotal/graph.hpp"
#include "semitotal/intervals.hpp"

namespace semitotal::io {

// Text formats. Lines starting with '#' and blank lines are ignored.
//
//   edge list:  "n m", then m lines "u v" (0-based)
//   intervals:  "n", then n lines "a b" (decimal numbers)
//   vertex set: whitespace-separated ids
//   partition:  first line clique ids, optional second line independent ids
//               (defaults to the complement)

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> data_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    auto hash = text.find_first_not_of(" \t\r");
    if (hash == std::string::npos || text[hash] == '#') continue;
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    lines.push_back(std::move(line));
  }
  return lines;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  require(ec == std::errc{} && ptr == tok.data() + tok.size(), Errc::InvalidInput,
          "line " + std::to_string(line) + ": expected a nonnegative integer, got '" + tok + "'");
  return value;
}

inline double parse_number(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == tok.size() && used > 0 && std::isfinite(value), Errc::InvalidInput,
          "line " + std::to_string(line) + ": expected a number, got '" + tok + "'");
  return value;
}

inline void expect_tokens(const Line& line, std::size_t count) {
  require(line.tokens.size() == count, Errc::InvalidInput,
          "line " + std::to_string(line.number) + ": expected " + std::to_string(count) +
              " fields, got " + std::to_string(line.tokens.size()));
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  auto lines = detail::data_lines(in);
  require(!lines.empty(), Errc::InvalidInput, "edge list: missing header line 'n m'");
  detail::expect_tokens(lines[0], 2);
  const std::size_t n = detail::parse_count(lines[0].tokens[0], lines[0].number);
  const std::size_t m = detail::parse_count(lines[0].tokens[1], lines[0].number);
  require(lines.size() == m + 1, Errc::InvalidInput,
          "edge list: header declares " + std::to_string(m) + " edges, found " +
              std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::expect_tokens(lines[i], 2);
    edges.push_back({detail::parse_count(lines[i].tokens[0], lines[i].number),
                     detail::parse_count(lines[i].tokens[1], lines[i].number)});
  }
  return Graph(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline IntervalModel read_intervals(std::istream& in) {
  auto lines = detail::data_lines(in);
  require(!lines.empty(), Errc::InvalidInput, "intervals: missing header line 'n'");
  detail::expect_tokens(lines[0], 1);
  const std::size_t n = detail::parse_count(lines[0].tokens[0], lines[0].number);
  require(lines.size() == n + 1, Errc::InvalidInput,
          "intervals: header declares " + std::to_string(n) + " intervals, found " +
              std::to_string(lines.size() - 1));
  IntervalModel m;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::expect_tokens(lines[i], 2);
    m.intervals.push_back({detail::parse_number(lines[i].tokens[0], lines[i].number),
                           detail::parse_number(lines[i].tokens[1], lines[i].number)});
  }
  return m;
}

inline void write_intervals(std::ostream& out, const IntervalModel& m) {
  out << m.size() << '\n';
  for (const auto& iv : m.intervals) out << iv.left << ' ' << iv.right << '\n';
}

inline VertexSet read_vertex_set(std::istream& in) {
  std::vector<Vertex> ids;
  for (const auto& line : detail::data_lines(in))
    for (const auto& tok : line.tokens) ids.push_back(detail::parse_count(tok, line.number));
  return VertexSet(std::move(ids));
}

/// `n` is the host graph order, used to fill a missing independent side.
inline SplitPartition read_partition(std::istream& in, std::size_t n) {
  auto lines = detail::data_lines(in);
  require(lines.size() == 1 || lines.size() == 2, Errc::InvalidInput,
          "partition: expected one or two data lines");
  auto ids = [](const detail::Line& line) {
    std::vector<Vertex> out;
    for (const auto& tok : line.tokens) out.push_back(detail::parse_count(tok, line.number));
    return VertexSet(std::move(out));
  };
  SplitPartition p{ids(lines[0]), {}};
  if (lines.size() == 2) {
    p.independent = ids(lines[1]);
  } else {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (!p.clique.contains(v)) rest.push_back(v);
    p.independent = VertexSet(std::move(rest));
  }
  return p;
}

inline void write_partition(std::ostream& out, const SplitPartition& p) {
  auto line = [&](const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  };
  line(p.clique);
  line(p.independent);
}

}  // namespace semitotal::io
