#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tridecomp/graph.hpp"

namespace tridecomp {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline bool parse_index(std::string_view tok, std::uint64_t& out) {
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace detail

// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines are
// skipped, and an optional "n <count>" header fixes the vertex count. Without a
// header the count is max index + 1.
inline Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t declared_n = 0;
  bool has_header = false;
  std::uint64_t max_index = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = detail::trim(body);
    if (body.empty()) continue;
    const auto tokens = detail::split_ws(body);
    if (tokens.size() != 2) throw ParseError(lineno, "expected two fields, got " + std::to_string(tokens.size()));
    if (tokens[0] == "n") {
      std::uint64_t count = 0;
      if (has_header || !pairs.empty()) throw ParseError(lineno, "header must precede all edges and appear once");
      if (!detail::parse_index(tokens[1], count)) throw ParseError(lineno, "bad vertex count");
      if (count == 0) throw EmptyGraphError();
      declared_n = static_cast<std::size_t>(count);
      has_header = true;
      continue;
    }
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!detail::parse_index(tokens[0], u) || !detail::parse_index(tokens[1], v))
      throw ParseError(lineno, "expected two non-negative integers");
    if (u > 0xFFFFFFFEULL || v > 0xFFFFFFFEULL) throw ParseError(lineno, "vertex index too large");
    if (u == v) throw LoopEdgeError(lineno, static_cast<Vertex>(u));
    if (has_header && (u >= declared_n || v >= declared_n))
      throw ParseError(lineno, "vertex index not below declared n = " + std::to_string(declared_n));
    max_index = std::max({max_index, u, v});
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  const std::size_t n = has_header ? declared_n : (pairs.empty() ? 0 : static_cast<std::size_t>(max_index) + 1);
  if (n == 0) throw EmptyGraphError();
  GraphBuilder b(n);
  for (auto [u, v] : pairs) b.add_edge(u, v);
  return b.build();
}

inline Graph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

// Canonical form: header line then one lexicographic edge per line.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace tridecomp
