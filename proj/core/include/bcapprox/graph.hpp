#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace bcapprox {

using NodeId = std::uint32_t;

// Immutable unweighted graph in compressed adjacency form.
//
// Nodes are dense ids in [0, n). The external id each node had in the input is
// kept in labels(). For undirected graphs the backward adjacency aliases the
// forward one.
class Graph {
 public:
  Graph() = default;

  // Builds from dense-id edges. Self-loops are dropped and duplicates
  // collapsed; for undirected graphs (u,v) and (v,u) are the same edge.
  // `labels` may be empty, in which case node i is labelled i.
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<NodeId, NodeId>> edges,
                          bool directed,
                          std::vector<std::uint64_t> labels = {});

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  // Distinct edges; an undirected edge counts once.
  std::size_t num_edges() const noexcept { return num_edges_; }
  bool directed() const noexcept { return directed_; }

  std::span<const NodeId> out_neighbors(NodeId v) const noexcept {
    return {out_adj_.data() + out_offsets_[v],
            out_adj_.data() + out_offsets_[v + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const noexcept {
    if (!directed_) return out_neighbors(v);
    return {in_adj_.data() + in_offsets_[v], in_adj_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(NodeId v) const noexcept {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(NodeId v) const noexcept {
    return directed_ ? in_offsets_[v + 1] - in_offsets_[v] : out_degree(v);
  }

  std::uint64_t label(NodeId v) const noexcept { return labels_[v]; }
  std::span<const std::uint64_t> labels() const noexcept { return labels_; }

  // Node ids sorted by external label; the canonical report order.
  std::vector<NodeId> nodes_by_label() const;

 private:
  bool directed_ = false;
  std::size_t num_edges_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_adj_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_adj_;
  std::vector<std::uint64_t> labels_;
};

// Parses a SNAP-style edge list: one "u v" pair of nonnegative integers per
// line, '#' and '%' start comment lines, blank lines are skipped. Tokens after
// the second on a line (weights, timestamps) are ignored. External ids are
// remapped to dense ids in first-appearance order.
//
// Throws ParseError on a malformed line and EmptyGraphError if no edge
// survives (self-loops alone do not count).
Graph load_edge_list(std::istream& in, bool directed);
Graph load_edge_list_file(const std::filesystem::path& path, bool directed);

// Writes "u v" lines using external labels, one per distinct edge.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace bcapprox
