#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "linkage/errors.hpp"
#include "linkage/graph.hpp"

namespace linkage {

enum class GraphFormat { automatic, edge_list, graph6 };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<long long> to_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace detail

// "n m" header followed by m lines "u v". Blank lines are ignored.
inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::optional<Graph> g;
  long long expected = 0;
  long long seen = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const auto fields = detail::split_ws(lines[i]);
    if (fields.empty()) continue;
    if (fields.size() != 2) throw ParseError(line_no, "expected two integers");
    const auto x = detail::to_integer(fields[0]);
    const auto y = detail::to_integer(fields[1]);
    if (!x || !y) throw ParseError(line_no, "expected two integers");
    if (!g) {
      if (*x < 0 || *y < 0 || *x > (1 << 24)) throw ParseError(line_no, "malformed header");
      g.emplace(static_cast<int>(*x));
      expected = *y;
      continue;
    }
    if (seen == expected) throw ParseError(line_no, "more edges than the header declares");
    if (*x < 0 || *y < 0 || *x >= g->vertex_count() || *y >= g->vertex_count()) {
      throw ParseError(line_no, "vertex out of range [0, " + std::to_string(g->vertex_count()) + ")");
    }
    if (*x == *y) throw ParseError(line_no, "self-loop");
    if (!g->add_edge(static_cast<Vertex>(*x), static_cast<Vertex>(*y))) {
      throw ParseError(line_no, "duplicate edge");
    }
    ++seen;
  }
  if (!g) throw ParseError(1, "missing header");
  if (seen != expected) {
    throw ParseError(static_cast<int>(lines.size()), "header declares " + std::to_string(expected) +
                                                         " edges, found " + std::to_string(seen));
  }
  return *g;
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// One graph6 line (without newline). `line_no` is only used in errors.
inline Graph parse_graph6(std::string_view line, int line_no = 1) {
  line = detail::trim(line);
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError(line_no, "graph6 byte out of range");
  }
  std::size_t pos = 0;
  auto take = [&](std::size_t count) -> std::uint64_t {
    if (pos + count > line.size()) throw ParseError(line_no, "graph6 string truncated");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < count; ++i) value = (value << 6) | static_cast<std::uint64_t>(line[pos++] - 63);
    return value;
  };
  std::uint64_t n = 0;
  if (line.empty()) throw ParseError(line_no, "empty graph6 string");
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > (1u << 24)) throw ParseError(line_no, "graph6 vertex count too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != body) throw ParseError(line_no, "graph6 length does not match vertex count");
  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < body * 6; ++k) {
    const int byte = line[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError(line_no, "non-zero graph6 padding bits");
  }
  return g;
}

inline std::string serialize_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.vertex_count(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// Edge list when the first non-blank line has two fields, graph6 otherwise.
inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic) {
  if (format == GraphFormat::automatic) {
    format = GraphFormat::graph6;
    for (auto line : detail::split_lines(text)) {
      auto fields = detail::split_ws(line);
      if (fields.empty()) continue;
      if (fields.size() > 1) format = GraphFormat::edge_list;
      break;
    }
  }
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  const auto lines = detail::split_lines(text);
  std::optional<Graph> g;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty()) continue;
    if (g) throw ParseError(static_cast<int>(i) + 1, "expected a single graph6 line");
    g = parse_graph6(lines[i], static_cast<int>(i) + 1);
  }
  if (!g) throw ParseError(1, "no graph6 line found");
  return *g;
}

// Every non-blank line of a graph6 stream.
inline std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!detail::trim(lines[i]).empty()) out.push_back(parse_graph6(lines[i], static_cast<int>(i) + 1));
  }
  return out;
}

struct RootSpec {
  std::vector<Vertex> a;
  Vertex b1 = 0;
  Vertex b2 = 1;
};

// Either "a:1,2,3 b:0,4" (the a-part may be empty or omitted) or
// {"a":[1,2,3],"b1":0,"b2":4}.
inline RootSpec parse_roots(std::string_view text) {
  text = detail::trim(text);
  RootSpec spec;
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      spec.a = j.value("a", std::vector<Vertex>{});
      spec.b1 = j.at("b1").get<Vertex>();
      spec.b2 = j.at("b2").get<Vertex>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(1, std::string("bad roots JSON: ") + e.what());
    }
    return spec;
  }
  auto parse_list = [](std::string_view body) {
    std::vector<Vertex> out;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      if (comma == std::string_view::npos) comma = body.size();
      auto item = detail::trim(body.substr(start, comma - start));
      if (!item.empty()) {
        auto v = detail::to_integer(item);
        if (!v || *v < 0) throw ParseError(1, "bad vertex id '" + std::string(item) + "' in roots");
        out.push_back(static_cast<Vertex>(*v));
      }
      start = comma + 1;
    }
    return out;
  };
  bool have_b = false;
  for (auto field : detail::split_ws(text)) {
    if (field.substr(0, 2) == "a:") {
      spec.a = parse_list(field.substr(2));
    } else if (field.substr(0, 2) == "b:") {
      auto b = parse_list(field.substr(2));
      if (b.size() != 2) throw ParseError(1, "roots need exactly two b vertices");
      spec.b1 = b[0];
      spec.b2 = b[1];
      have_b = true;
    } else {
      throw ParseError(1, "unrecognised roots field '" + std::string(field) + "'");
    }
  }
  if (!have_b) throw ParseError(1, "roots need a b:<b1>,<b2> field");
  return spec;
}

inline RootedGraph make_rooted(Graph g, const RootSpec& spec) {
  RootedGraph rg{std::move(g), spec.a, spec.b1, spec.b2};
  rg.validate();
  return rg;
}

}  // namespace linkage
