#include "bcapprox/diameter.hpp"

#include <algorithm>
#include <vector>

#include "bcapprox/rng.hpp"

namespace bcapprox {
namespace {

struct SweepResult {
  std::uint32_t ecc = 0;
  NodeId farthest = 0;
};

class Bfs {
 public:
  explicit Bfs(std::size_t n) : dist_(n, -1), parent_(n, 0) { order_.reserve(n); }

  SweepResult run(const Graph& g, NodeId root, bool forward) {
    for (NodeId v : order_) dist_[v] = -1;
    order_.clear();
    dist_[root] = 0;
    parent_[root] = root;
    order_.push_back(root);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const NodeId u = order_[head];
      auto nbrs = forward ? g.out_neighbors(u) : g.in_neighbors(u);
      for (NodeId w : nbrs) {
        if (dist_[w] < 0) {
          dist_[w] = dist_[u] + 1;
          parent_[w] = u;
          order_.push_back(w);
        }
      }
    }
    const NodeId last = order_.back();
    return {static_cast<std::uint32_t>(dist_[last]), last};
  }

  // Node halfway along the BFS-tree path from the last root to `v`.
  NodeId midpoint(NodeId v) const {
    const int steps = dist_[v] / 2;
    for (int i = 0; i < steps; ++i) v = parent_[v];
    return v;
  }

  const std::vector<NodeId>& visited() const { return order_; }

 private:
  std::vector<int> dist_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> order_;
};

DiameterBound undirected_bound(const Graph& g, unsigned pivots, Rng& rng) {
  const std::size_t n = g.num_nodes();
  Bfs bfs(n);
  std::vector<char> seen(n, 0);
  std::uint32_t result = 0;

  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // Component discovery doubles as the first pivot sweep, from `start`.
    SweepResult sweep = bfs.run(g, start, true);
    std::vector<NodeId> members = bfs.visited();
    for (NodeId v : members) seen[v] = 1;
    const auto comp_size = static_cast<std::uint32_t>(members.size());

    // Re-root at a random member so the pivot choice is seed dependent.
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    const NodeId root = members[pick(rng)];
    if (root != start) sweep = bfs.run(g, root, true);
    std::uint32_t best = 2 * sweep.ecc + 1;

    // Alternate: sweep from the far end, then from the middle of that path.
    unsigned used = 1;
    while (used < pivots && best > 1) {
      sweep = bfs.run(g, sweep.farthest, true);
      best = std::min(best, 2 * sweep.ecc + 1);
      if (++used >= pivots) break;
      sweep = bfs.run(g, bfs.midpoint(sweep.farthest), true);
      best = std::min(best, 2 * sweep.ecc + 1);
      ++used;
    }
    result = std::max(result, std::min(best, comp_size));
  }
  return {result, true};
}

DiameterBound directed_bound(const Graph& g, unsigned pivots, Rng& rng) {
  const std::size_t n = g.num_nodes();
  Bfs bfs(n);
  std::vector<NodeId> candidates;

  NodeId hub = 0;
  for (NodeId v = 1; v < n; ++v) {
    if (g.out_degree(v) + g.in_degree(v) > g.out_degree(hub) + g.in_degree(hub)) hub = v;
  }
  candidates.push_back(hub);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  while (candidates.size() < std::max(1u, pivots)) candidates.push_back(pick(rng));

  std::uint32_t best = 1;
  for (NodeId p : candidates) {
    const std::uint32_t fwd = bfs.run(g, p, true).ecc;
    const std::uint32_t bwd = bfs.run(g, p, false).ecc;
    best = std::max(best, fwd + bwd + 1);
  }
  return {std::min<std::uint32_t>(best, static_cast<std::uint32_t>(n)), false};
}

}  // namespace

DiameterBound vertex_diameter_upper_bound(const Graph& g, unsigned pivots,
                                          std::uint64_t seed) {
  if (g.num_nodes() == 0) return {0, true};
  Rng rng = substream(seed, Stream::kDiameter, 0);
  return g.directed() ? directed_bound(g, pivots, rng) : undirected_bound(g, pivots, rng);
}

}  // namespace bcapprox
