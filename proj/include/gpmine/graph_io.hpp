#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gpmine/error.hpp"
#include "gpmine/graph.hpp"

namespace gpmine {

namespace io_detail {

// Strips a trailing '\r' so both '\n' and '\r\n' inputs work.
inline void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

inline bool comment(const std::string& line) {
  auto i = line.find_first_not_of(" \t");
  return i != std::string::npos && (line[i] == '#' || line[i] == '%');
}

inline bool parse_u64(const std::string& tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  out = 0;
  for (unsigned char c : tok) {
    if (!std::isdigit(c)) return false;
    if (out > (UINT64_MAX - (c - '0')) / 10) return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) out.push_back(std::move(t));
  return out;
}

// Compacts arbitrary input ids to dense [0,n) preserving ascending order.
// Returns the dense id lookup; `ids` ends up sorted and unique.
inline std::unordered_map<std::uint64_t, VertexId> compact_ids(
    std::vector<std::uint64_t>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::unordered_map<std::uint64_t, VertexId> dense;
  dense.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    dense.emplace(ids[i], static_cast<VertexId>(i));
  return dense;
}

inline void sort_dedup(std::vector<std::vector<VertexId>>& adj) {
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

}  // namespace io_detail

/// Loads a whitespace-separated edge-list stream ("u v" per line; '#'/'%'
/// comment lines). The result is undirected and cleaned: symmetrized,
/// self-loops dropped, duplicate edges merged, neighbor lists ascending.
/// Gaps in input ids are compacted; the input ids are retained on the
/// graph. Throws parse_error with the line number on malformed lines and
/// error if no edge survives cleaning.
inline Graph load_edge_list(std::istream& in) {
  using namespace io_detail;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (blank(line) || comment(line)) continue;
    auto toks = tokens(line);
    std::uint64_t u, v;
    if (toks.size() != 2 || !parse_u64(toks[0], u) || !parse_u64(toks[1], v))
      throw parse_error(lineno, "expected two non-negative integers");
    if (u == v) continue;  // self-loop
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw error("edge list is empty after cleaning");

  std::vector<std::uint64_t> ids;
  ids.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    ids.push_back(u);
    ids.push_back(v);
  }
  auto dense = compact_ids(ids);
  std::vector<std::vector<VertexId>> adj(ids.size());
  for (auto [u, v] : edges) {
    VertexId du = dense[u], dv = dense[v];
    adj[du].push_back(dv);
    adj[dv].push_back(du);
  }
  sort_dedup(adj);
  return Graph(std::move(adj), {}, std::move(ids), false);
}

/// Loads a labeled graph in gSpan-style text form: "v <id> <label>" lines
/// declare vertices, "e <u> <v> [elabel]" lines declare edges (the edge
/// label token is accepted and ignored). 't' transaction headers and
/// '#'/'%' comments are skipped. Numeric label tokens keep their value;
/// other tokens are interned to integers above the largest numeric label,
/// in first-appearance order. Cleaning matches load_edge_list. Errors:
/// duplicate vertex declaration, edge endpoint never declared, malformed
/// lines, empty edge set.
inline Graph load_labeled_graph(std::istream& in) {
  using namespace io_detail;
  std::vector<std::pair<std::uint64_t, std::string>> decls;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::vector<std::size_t> edge_lines;
  std::unordered_map<std::uint64_t, std::size_t> declared;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (blank(line) || comment(line)) continue;
    auto toks = tokens(line);
    if (toks[0] == "t") continue;  // gSpan transaction header
    if (toks[0] == "v") {
      std::uint64_t id;
      if (toks.size() != 3 || !parse_u64(toks[1], id))
        throw parse_error(lineno, "expected 'v <id> <label>'");
      if (!declared.emplace(id, decls.size()).second)
        throw parse_error(lineno, "vertex " + toks[1] + " declared twice");
      decls.emplace_back(id, toks[2]);
    } else if (toks[0] == "e") {
      std::uint64_t u, v;
      if ((toks.size() != 3 && toks.size() != 4) || !parse_u64(toks[1], u) ||
          !parse_u64(toks[2], v))
        throw parse_error(lineno, "expected 'e <u> <v> [label]'");
      if (u == v) continue;
      edges.emplace_back(u, v);
      edge_lines.push_back(lineno);
    } else {
      throw parse_error(lineno, "unknown line tag '" + toks[0] + "'");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::uint64_t id : {edges[i].first, edges[i].second})
      if (!declared.count(id))
        throw parse_error(edge_lines[i],
                          "edge references undeclared vertex " + std::to_string(id));
  }
  if (edges.empty()) throw error("labeled graph has no edges after cleaning");

  std::vector<std::uint64_t> ids;
  ids.reserve(decls.size());
  for (auto& [id, lab] : decls) ids.push_back(id);
  auto dense = compact_ids(ids);

  // Numeric labels keep their value; other tokens are interned above them.
  std::uint64_t max_numeric = 0;
  bool any_numeric = false;
  for (auto& [id, lab] : decls) {
    std::uint64_t val;
    if (parse_u64(lab, val)) {
      if (val > 0xFFFFFFFFull) throw error("vertex label too large: " + lab);
      max_numeric = std::max(max_numeric, val);
      any_numeric = true;
    }
  }
  std::unordered_map<std::string, std::uint32_t> interned;
  std::uint64_t next_id = any_numeric ? max_numeric + 1 : 0;
  std::vector<std::uint32_t> labels(ids.size(), 0);
  for (auto& [id, lab] : decls) {
    std::uint64_t val;
    std::uint32_t dense_label;
    if (parse_u64(lab, val)) {
      dense_label = static_cast<std::uint32_t>(val);
    } else {
      auto it = interned.find(lab);
      if (it == interned.end()) {
        if (next_id > 0xFFFFFFFFull) throw error("too many distinct labels");
        it = interned.emplace(lab, static_cast<std::uint32_t>(next_id++)).first;
      }
      dense_label = it->second;
    }
    labels[dense[id]] = dense_label;
  }

  std::vector<std::vector<VertexId>> adj(ids.size());
  for (auto [u, v] : edges) {
    VertexId du = dense[u], dv = dense[v];
    adj[du].push_back(dv);
    adj[dv].push_back(du);
  }
  sort_dedup(adj);
  return Graph(std::move(adj), std::move(labels), std::move(ids), false);
}

/// Writes the gSpan-style text form read by load_labeled_graph, using the
/// dense vertex ids. Each undirected edge is written once.
inline void write_labeled_graph(const Graph& g, std::ostream& out) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    out << "v " << v << ' ' << (g.labeled() ? g.label(v) : 0) << '\n';
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.neighbors(u))
      if (g.oriented() || u < v) out << "e " << u << ' ' << v << '\n';
}

}  // namespace gpmine
