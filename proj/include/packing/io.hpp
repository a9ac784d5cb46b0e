#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "packing/errors.hpp"
#include "packing/graph.hpp"
#include "packing/set_system.hpp"

// Line-oriented instance formats, DIMACS-flavored, ids 1-based externally:
//
//   p graph <n> <m>          p setsystem <n> <m>
//   e <u> <v>   (m lines)    s <k> <e1> ... <ek>   (m lines)
//
// Blank lines and lines starting with 'c' are ignored when parsing. Canonical
// serialization emits no comments, lists edges sorted by (min endpoint, max
// endpoint), sorts elements within each set, and preserves set order.
// Solution files are a single line of space-separated 1-based ids.

namespace packing {

namespace detail {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  // next non-blank, non-comment line; empty optional at end of input
  bool next(std::string& out) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) continue;
      if (line[first] == 'c') continue;
      out.assign(line);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line_no) + ": " + msg);
  }
};

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const LineReader& r, const std::string& tok, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    throw InputError("line " + std::to_string(r.line_no) + ": bad " +
                     std::string(what) + " '" + tok + "'");
  return value;
}

inline std::pair<int, int> parse_header(LineReader& r, const char* kind) {
  std::string line;
  if (!r.next(line)) throw InputError("empty input, expected 'p' header");
  auto t = tokens(line);
  if (t.size() != 4 || t[0] != "p" || t[1] != kind)
    r.fail("expected header 'p " + std::string(kind) + " <n> <m>'");
  int n = parse_int(r, t[2], "count");
  int m = parse_int(r, t[3], "count");
  if (n < 0 || m < 0) r.fail("counts must be non-negative");
  return {n, m};
}

inline void expect_end(LineReader& r, const char* what) {
  std::string line;
  if (r.next(line)) r.fail(std::string("unexpected content after the declared ") + what);
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  detail::LineReader r{text};
  auto [n, m] = detail::parse_header(r, "graph");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  std::set<std::pair<int, int>> seen;
  std::string line;
  for (int i = 0; i < m; ++i) {
    if (!r.next(line))
      throw InputError("line " + std::to_string(r.line_no) + ": expected " +
                       std::to_string(m) + " edge lines, found " + std::to_string(i));
    auto t = detail::tokens(line);
    if (t.size() != 3 || t[0] != "e") r.fail("expected 'e <u> <v>'");
    int u = detail::parse_int(r, t[1], "vertex id");
    int v = detail::parse_int(r, t[2], "vertex id");
    if (u < 1 || u > n || v < 1 || v > n) r.fail("vertex id out of range 1.." + std::to_string(n));
    if (u == v) r.fail("self-loop 'e " + t[1] + " " + t[2] + "'");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      r.fail("duplicate edge 'e " + t[1] + " " + t[2] + "'");
    edges.emplace_back(u - 1, v - 1);
  }
  detail::expect_end(r, "edges");
  return Graph(n, std::move(edges));
}

inline std::string serialize_graph(const Graph& g) {
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

inline SetSystem parse_set_system(std::string_view text) {
  detail::LineReader r{text};
  auto [n, m] = detail::parse_header(r, "setsystem");
  std::vector<std::vector<int>> sets;
  sets.reserve(m);
  std::string line;
  for (int i = 0; i < m; ++i) {
    if (!r.next(line))
      throw InputError("line " + std::to_string(r.line_no) + ": expected " +
                       std::to_string(m) + " set lines, found " + std::to_string(i));
    auto t = detail::tokens(line);
    if (t.size() < 2 || t[0] != "s") r.fail("expected 's <k> <elements...>'");
    int k = detail::parse_int(r, t[1], "set size");
    if (k < 0) r.fail("set size must be non-negative");
    if (static_cast<int>(t.size()) != k + 2)
      r.fail("set declares " + std::to_string(k) + " elements but lists " +
             std::to_string(t.size() - 2));
    std::vector<int> s;
    s.reserve(k);
    for (int j = 0; j < k; ++j) {
      int a = detail::parse_int(r, t[j + 2], "element id");
      if (a < 1 || a > n) r.fail("element id out of range 1.." + std::to_string(n));
      for (int prev : s)
        if (prev == a - 1) r.fail("duplicate element " + t[j + 2] + " within a set");
      s.push_back(a - 1);
    }
    sets.push_back(std::move(s));
  }
  detail::expect_end(r, "sets");
  return SetSystem(n, std::move(sets));
}

inline std::string serialize_set_system(const SetSystem& t) {
  std::ostringstream out;
  out << "p setsystem " << t.universe_size() << ' ' << t.set_count() << '\n';
  for (int j = 0; j < t.set_count(); ++j) {
    out << "s " << t.set(j).size();
    for (int a : t.set(j)) out << ' ' << a + 1;
    out << '\n';
  }
  return out.str();
}

/// One line of space-separated 1-based ids; returns 0-based ids.
inline std::vector<int> parse_solution_ids(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> ids;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InputError("bad solution id '" + tok + "'");
    if (value < 1) throw InputError("solution ids are 1-based, got '" + tok + "'");
    ids.push_back(value - 1);
  }
  return ids;
}

inline std::string serialize_solution_ids(std::span<const int> ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << ' ';
    out << ids[i] + 1;
  }
  out << '\n';
  return out.str();
}

enum class InstanceKind { graph, set_system };

struct InstanceFile {
  InstanceKind kind{};
  std::variant<Graph, SetSystem> payload;
  std::string source_path;
};

/// Parses either format, deciding by the 'p' header.
inline InstanceFile parse_instance(std::string_view text, std::string source_path = "") {
  detail::LineReader probe{text};
  std::string line;
  if (!probe.next(line)) throw InputError("empty input, expected 'p' header");
  auto t = detail::tokens(line);
  if (t.size() >= 2 && t[0] == "p" && t[1] == "graph")
    return {InstanceKind::graph, parse_graph(text), std::move(source_path)};
  if (t.size() >= 2 && t[0] == "p" && t[1] == "setsystem")
    return {InstanceKind::set_system, parse_set_system(text), std::move(source_path)};
  throw InputError("line " + std::to_string(probe.line_no) +
                   ": unknown header, expected 'p graph' or 'p setsystem'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

inline InstanceFile load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path), path);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace packing
