#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gpmine/error.hpp"

namespace gpmine {

using VertexId = std::uint32_t;

/// Immutable CSR graph. Neighbor lists are strictly ascending, with no
/// self-loops and no duplicate edges. Undirected graphs store both
/// half-edges; oriented graphs (see orient_dag) store each edge once,
/// pointing along a total vertex order, and are acyclic by construction.
///
/// Vertex ids are dense in [0, num_vertices); the ids of the input file
/// are kept in original_id() for result reporting.
class Graph {
public:
  Graph() = default;

  /// Builds from per-vertex adjacency. Each list must be strictly
  /// ascending and free of self-loops; `labels` is empty or one entry per
  /// vertex; `original_ids` is empty (identity) or one entry per vertex.
  Graph(std::vector<std::vector<VertexId>> adjacency,
        std::vector<std::uint32_t> labels = {},
        std::vector<std::uint64_t> original_ids = {}, bool oriented = false)
      : labels_(std::move(labels)),
        original_ids_(std::move(original_ids)),
        oriented_(oriented) {
    const std::size_t n = adjacency.size();
    if (!labels_.empty() && labels_.size() != n)
      throw error("label array size does not match vertex count");
    if (!original_ids_.empty() && original_ids_.size() != n)
      throw error("original id array size does not match vertex count");
    row_offsets_.resize(n + 1, 0);
    std::size_t m = 0;
    for (std::size_t v = 0; v < n; ++v) m += adjacency[v].size();
    col_.reserve(m);
    for (std::size_t v = 0; v < n; ++v) {
      const auto& nbrs = adjacency[v];
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (nbrs[i] >= n) throw error("neighbor id out of range");
        if (nbrs[i] == v) throw error("self-loop in adjacency");
        if (i > 0 && nbrs[i] <= nbrs[i - 1])
          throw error("neighbor list not strictly ascending");
        col_.push_back(nbrs[i]);
      }
      row_offsets_[v + 1] = col_.size();
    }
  }

  std::uint32_t num_vertices() const {
    return static_cast<std::uint32_t>(row_offsets_.empty() ? 0 : row_offsets_.size() - 1);
  }

  /// Number of stored directed half-edges (== row_offsets.back()).
  std::uint64_t num_edges() const { return col_.size(); }

  bool oriented() const { return oriented_; }
  bool labeled() const { return !labels_.empty(); }

  std::uint32_t label(VertexId v) const { return labels_[v]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }

  /// Input-file id of dense vertex v (identity when the input had no gaps).
  std::uint64_t original_id(VertexId v) const {
    return original_ids_.empty() ? v : original_ids_[v];
  }
  const std::vector<std::uint64_t>& original_ids() const { return original_ids_; }

  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(row_offsets_[v + 1] - row_offsets_[v]);
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {col_.data() + row_offsets_[v],
            col_.data() + row_offsets_[v + 1]};
  }

  std::uint32_t max_degree() const {
    std::uint32_t d = 0;
    for (VertexId v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Binary search of v in N(u). On an oriented graph this tests the
  /// directed edge u->v. Throws on out-of-range ids.
  bool is_connected(VertexId u, VertexId v) const {
    if (u >= num_vertices() || v >= num_vertices())
      throw error("is_connected: vertex id out of range");
    return has_edge(u, v);
  }

  /// Same as is_connected but without the range check; for engine loops
  /// whose candidates are graph vertices by construction.
  bool has_edge(VertexId u, VertexId v) const {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  const std::vector<std::uint64_t>& row_offsets() const { return row_offsets_; }
  const std::vector<VertexId>& column_indices() const { return col_; }

private:
  std::vector<std::uint64_t> row_offsets_;
  std::vector<VertexId> col_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint64_t> original_ids_;
  bool oriented_ = false;
};

/// Orientation: keep each undirected edge {u,v} once, pointing toward the
/// endpoint with higher degree, ties toward the larger vertex id. The
/// resulting digraph follows a total vertex order, hence is acyclic.
/// Degrees are those of the cleaned undirected input.
inline Graph orient_dag(const Graph& g) {
  if (g.oriented()) throw error("orient_dag: graph is already oriented");
  const std::uint32_t n = g.num_vertices();
  auto precedes = [&](VertexId a, VertexId b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
  };
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.neighbors(u))
      if (precedes(u, v)) adj[u].push_back(v);
  return Graph(std::move(adj), g.labels(), g.original_ids(), true);
}

}  // namespace gpmine
