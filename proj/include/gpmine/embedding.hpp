#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gpmine/graph.hpp"

namespace gpmine {

/// Exploration mode: a vertex-induced embedding is a vertex set plus all
/// graph edges among it; an edge-induced embedding is an explicit edge set.
enum class Mode { vertex_induced, edge_induced };

/// A materialized (partial) embedding, reconstructed from the level lists.
/// `vertices` holds the distinct vertices in insertion order. In edge mode
/// `edges` holds the edge sequence as positions into `vertices`, and
/// `slots` records each vertex's introduction slot in the his/vid chain
/// (needed to append further edge-level entries).
struct Embedding {
  struct Edge {
    std::uint32_t src_pos;
    std::uint32_t dst_pos;
  };

  std::vector<VertexId> vertices;
  std::vector<Edge> edges;        // edge mode only
  std::vector<std::uint8_t> slots;  // edge mode only, parallel to vertices

  std::size_t size() const { return vertices.size(); }
  std::size_t num_edges() const { return edges.size(); }

  bool contains(VertexId v) const {
    for (VertexId x : vertices)
      if (x == v) return true;
    return false;
  }

  /// Position of v in `vertices`, or size() if absent.
  std::uint32_t position_of(VertexId v) const {
    for (std::uint32_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return i;
    return static_cast<std::uint32_t>(vertices.size());
  }

  std::pair<VertexId, VertexId> edge_endpoints(std::size_t i) const {
    return {vertices[edges[i].src_pos], vertices[edges[i].dst_pos]};
  }

  void clear() {
    vertices.clear();
    edges.clear();
    slots.clear();
  }
};

}  // namespace gpmine
