#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "gpmine/embedding.hpp"
#include "gpmine/error.hpp"
#include "gpmine/graph.hpp"

namespace gpmine {

/// One level of the worklist, structure-of-arrays. Entry i of level k
/// extends entry idx[i] of level k-1 with vertex vid[i]. At level 1 the
/// idx column holds the first endpoint directly (the "level 0" of the
/// backtracking scheme is conceptual and never stored). In edge mode the
/// his column gives the chain slot (introduction level) of the edge's
/// source vertex; his is empty in vertex mode.
struct Level {
  std::vector<std::uint32_t> idx;
  std::vector<VertexId> vid;
  std::vector<std::uint8_t> his;  // edge mode only

  std::size_t size() const { return vid.size(); }

  void push(std::uint32_t i, VertexId v) {
    idx.push_back(i);
    vid.push_back(v);
  }
  void push(std::uint32_t i, VertexId v, std::uint8_t h) {
    idx.push_back(i);
    vid.push_back(v);
    his.push_back(h);
  }
  void resize(std::size_t n, bool edge_mode) {
    idx.resize(n);
    vid.resize(n);
    if (edge_mode) his.resize(n);
  }
};

/// Level-structured worklist of partial embeddings. Level k entries
/// reconstruct to embeddings with k+1 vertices (vertex mode) or k edges
/// (edge mode). Completed levels are immutable and safe for concurrent
/// reads; a level under construction is written into disjoint reserved
/// ranges (see engine.hpp).
class EmbeddingList {
public:
  explicit EmbeddingList(Mode mode = Mode::vertex_induced) : mode_(mode) {}

  Mode mode() const { return mode_; }
  bool edge_mode() const { return mode_ == Mode::edge_induced; }

  /// Highest populated level; 0 when empty.
  std::size_t current_level() const { return levels_.size(); }

  const Level& level(std::size_t k) const { return levels_.at(k - 1); }
  Level& level(std::size_t k) { return levels_.at(k - 1); }
  std::size_t level_size(std::size_t k) const { return level(k).size(); }

  void push_level(Level&& l) { levels_.push_back(std::move(l)); }
  void replace_level(std::size_t k, Level&& l) { levels_.at(k - 1) = std::move(l); }

  /// Rebuilds the full embedding for entry `pos` of `lev` by backtracking
  /// the idx links down to level 1. Vertex order is insertion order.
  Embedding reconstruct(std::size_t lev, std::size_t pos) const {
    Embedding out;
    reconstruct_into(lev, pos, out);
    return out;
  }

  /// Allocation-friendly variant; clears and refills `out`.
  void reconstruct_into(std::size_t lev, std::size_t pos, Embedding& out) const {
    if (lev == 0 || lev > levels_.size())
      throw error("reconstruct: level out of range");
    if (pos >= level(lev).size())
      throw error("reconstruct: position out of range");
    out.clear();
    // Chain slot j holds the vertex introduced at level j (slot 0 comes
    // from level 1's idx column). Walk up, then emit in insertion order.
    std::uint32_t p = static_cast<std::uint32_t>(pos);
    chain_.assign(lev + 1, 0);
    his_chain_.assign(lev + 1, 0);
    for (std::size_t k = lev; k >= 2; --k) {
      const Level& l = levels_[k - 1];
      chain_[k] = l.vid[p];
      if (edge_mode()) his_chain_[k] = l.his[p];
      p = l.idx[p];
    }
    const Level& l1 = levels_[0];
    chain_[0] = l1.idx[p];
    chain_[1] = l1.vid[p];
    if (edge_mode()) his_chain_[1] = 0;

    if (!edge_mode()) {
      out.vertices.assign(chain_.begin(), chain_.end());
      return;
    }
    // Edge mode: dedup the chain into distinct vertices and translate
    // (his, slot) pairs into position pairs.
    slot_pos_.assign(lev + 1, 0);
    for (std::size_t j = 0; j <= lev; ++j) {
      std::uint32_t at = out.position_of(chain_[j]);
      if (at == out.vertices.size()) {
        out.vertices.push_back(chain_[j]);
        out.slots.push_back(static_cast<std::uint8_t>(j));
      }
      slot_pos_[j] = at < out.vertices.size()
                         ? at
                         : static_cast<std::uint32_t>(out.vertices.size() - 1);
    }
    out.edges.reserve(lev);
    for (std::size_t j = 1; j <= lev; ++j)
      out.edges.push_back({slot_pos_[his_chain_[j]], slot_pos_[j]});
  }

  /// Splits a level-1 list into contiguous chunks of at most `chunk_size`
  /// entries, in order. Used by the edge-blocking schedule: the engine
  /// runs all levels for one chunk before moving to the next.
  std::vector<EmbeddingList> chunks(std::size_t chunk_size) const {
    if (current_level() != 1) throw error("chunks: list must be at level 1");
    if (chunk_size == 0) throw error("chunks: chunk size must be >= 1");
    const Level& l1 = levels_[0];
    std::vector<EmbeddingList> out;
    for (std::size_t begin = 0; begin < l1.size(); begin += chunk_size) {
      std::size_t end = std::min(begin + chunk_size, l1.size());
      EmbeddingList part(mode_);
      Level slice;
      slice.idx.assign(l1.idx.begin() + begin, l1.idx.begin() + end);
      slice.vid.assign(l1.vid.begin() + begin, l1.vid.begin() + end);
      if (edge_mode())
        slice.his.assign(l1.his.begin() + begin, l1.his.begin() + end);
      part.push_level(std::move(slice));
      out.push_back(std::move(part));
    }
    return out;
  }

  /// Structural validation of all idx/his links; throws on violation.
  void validate() const {
    for (std::size_t k = 1; k <= levels_.size(); ++k) {
      const Level& l = levels_[k - 1];
      if (l.idx.size() != l.vid.size() ||
          (edge_mode() && l.his.size() != l.vid.size()))
        throw error("level " + std::to_string(k) + ": column sizes differ");
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (k >= 2 && l.idx[i] >= levels_[k - 2].size())
          throw error("level " + std::to_string(k) + ": idx link out of bounds");
        if (edge_mode() && l.his[i] >= k)
          throw error("level " + std::to_string(k) + ": his not below level");
      }
    }
  }

  /// Debug dump of one level as TSV: level, position, idx, vid[, his].
  void dump_tsv(std::size_t lev, std::ostream& out) const {
    const Level& l = level(lev);
    for (std::size_t i = 0; i < l.size(); ++i) {
      out << lev << '\t' << i << '\t' << l.idx[i] << '\t' << l.vid[i];
      if (edge_mode()) out << '\t' << static_cast<unsigned>(l.his[i]);
      out << '\n';
    }
  }

private:
  Mode mode_;
  std::vector<Level> levels_;
  // reconstruct scratch; EmbeddingList is not shared mutably across threads,
  // each worker keeps its own clone or uses reconstruct() through a local copy.
  mutable std::vector<VertexId> chain_;
  mutable std::vector<std::uint8_t> his_chain_;
  mutable std::vector<std::uint32_t> slot_pos_;
};

/// Level-1 initialization with every qualifying single edge exactly once:
/// all directed edges of an oriented graph, or each undirected edge taken
/// as (u, v) with u < v. Edge mode entries carry his = 0.
inline EmbeddingList init_single_edges(const Graph& g, Mode mode) {
  EmbeddingList list(mode);
  Level l1;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (!g.oriented() && u >= v) continue;
      if (mode == Mode::edge_induced)
        l1.push(u, v, 0);
      else
        l1.push(u, v);
    }
  }
  list.push_level(std::move(l1));
  return list;
}

}  // namespace gpmine
