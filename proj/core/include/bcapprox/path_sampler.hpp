#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "bcapprox/graph.hpp"
#include "bcapprox/rng.hpp"

namespace bcapprox {

inline constexpr std::size_t kDefaultBagCap = 65536;

// Shortest-path DAG between s and t, discovered by a balanced bidirectional
// BFS. The per-node labels live in the PathSampler that produced the DAG; a
// SpDag is valid until that sampler runs its next search.
class SpDag {
 public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  NodeId source = 0;
  NodeId target = 0;
  std::uint32_t dist = kUnreachable;  // hop count
  double sigma_st = 0.0;              // number of shortest s-t paths

  bool reachable() const noexcept { return dist != kUnreachable; }

  // Nodes where the two searches met: all lie at the same distance from s,
  // and every shortest path crosses exactly one of them.
  std::span<const NodeId> meeting_nodes() const noexcept { return meeting_; }

  // Labels from the forward search (distance/path count from s) and the
  // backward search (distance/path count to t). -1 / 0 when not labelled.
  int dist_from_source(NodeId v) const noexcept { return (*fwd_dist_)[v]; }
  int dist_to_target(NodeId v) const noexcept { return (*bwd_dist_)[v]; }
  double paths_from_source(NodeId v) const noexcept { return (*fwd_sigma_)[v]; }
  double paths_to_target(NodeId v) const noexcept { return (*bwd_sigma_)[v]; }

 private:
  friend class PathSampler;
  std::vector<NodeId> meeting_;
  std::vector<double> meeting_cumulative_;
  const std::vector<int>* fwd_dist_ = nullptr;
  const std::vector<int>* bwd_dist_ = nullptr;
  const std::vector<double>* fwd_sigma_ = nullptr;
  const std::vector<double>* bwd_sigma_ = nullptr;
};

// One sample: a pair (s,t) and a bag of shortest s-t paths drawn uniformly
// with replacement. Only internal nodes are stored; every path has the same
// number of them (dist - 1), laid out contiguously.
struct PathBag {
  NodeId source = 0;
  NodeId target = 0;
  std::uint32_t path_length = 0;  // internal nodes per path
  std::size_t bag_size = 0;       // |tau|; 0 iff the pair is unreachable
  std::vector<NodeId> nodes;      // bag_size * path_length entries

  std::span<const NodeId> path(std::size_t i) const noexcept {
    return {nodes.data() + i * path_length, path_length};
  }

  // (node, number of paths in the bag through it), sorted by node.
  void multiplicities(std::vector<std::pair<NodeId, std::uint32_t>>& out) const;

  void clear() noexcept {
    path_length = 0;
    bag_size = 0;
    nodes.clear();
  }
};

// Uniform ordered pair with s != t. Throws DegenerateGraphError when n < 2.
std::pair<NodeId, NodeId> sample_pair(const Graph& g, Rng& rng);

// ceil(alpha * sigma) capped at bag_cap, at least 1. Zero when sigma == 0.
std::size_t bag_size_for(double sigma_st, double alpha, std::size_t bag_cap);

// Reusable search state for one worker. Not thread-safe; give each worker its
// own instance. The graph must outlive the sampler.
class PathSampler {
 public:
  explicit PathSampler(const Graph& g);

  // Balanced bidirectional BFS: at each step the side whose frontier has the
  // smaller total degree (out-degree forward, in-degree backward) expands one
  // full level; ties expand forward. Stops after the first level that meets
  // the other side. Requires s != t.
  const SpDag& bidirectional_bfs(NodeId s, NodeId t);

  // Draws bag_size_for(sigma_st, alpha, bag_cap) shortest paths uniformly and
  // independently from the DAG's path set. An unreachable DAG yields an empty
  // bag. `dag` must be the sampler's current DAG.
  void sample_bag(const SpDag& dag, double alpha, std::size_t bag_cap, Rng& rng,
                  PathBag& out);
  PathBag sample_bag(const SpDag& dag, double alpha, std::size_t bag_cap, Rng& rng);

  // sample_pair + bidirectional_bfs + sample_bag.
  void draw(Rng& rng, double alpha, std::size_t bag_cap, PathBag& out);

  const Graph& graph() const noexcept { return *graph_; }

 private:
  void reset();
  bool expand_forward();
  bool expand_backward();
  void finish_meeting();
  void walk(NodeId meet, std::span<NodeId> full_path, Rng& rng) const;

  const Graph* graph_;
  std::vector<int> fwd_dist_, bwd_dist_;
  std::vector<double> fwd_sigma_, bwd_sigma_;
  std::vector<NodeId> touched_;
  std::vector<NodeId> fwd_frontier_, bwd_frontier_, next_;
  int fwd_depth_ = 0;
  int bwd_depth_ = 0;
  SpDag dag_;
  std::vector<NodeId> scratch_path_;
};

}  // namespace bcapprox
