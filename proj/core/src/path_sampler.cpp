#include "bcapprox/path_sampler.hpp"

#include <algorithm>
#include <cmath>

#include "bcapprox/error.hpp"

namespace bcapprox {
namespace {

// Picks an index with probability weight[i] / total by inverse transform on
// the running sum. Falls back to the last positive weight so rounding in the
// running sum can never select an invalid entry.
template <typename WeightFn>
std::size_t pick_weighted(std::size_t count, double total, Rng& rng, WeightFn weight) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = unit(rng) * total;
  double acc = 0.0;
  std::size_t last = count;
  for (std::size_t i = 0; i < count; ++i) {
    const double w = weight(i);
    if (w <= 0.0) continue;
    acc += w;
    last = i;
    if (r < acc) return i;
  }
  return last;
}

}  // namespace

void PathBag::multiplicities(std::vector<std::pair<NodeId, std::uint32_t>>& out) const {
  out.clear();
  if (bag_size == 0 || path_length == 0) return;
  std::vector<NodeId> sorted(nodes);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.emplace_back(sorted[i], static_cast<std::uint32_t>(j - i));
    i = j;
  }
}

std::pair<NodeId, NodeId> sample_pair(const Graph& g, Rng& rng) {
  const std::size_t n = g.num_nodes();
  if (n < 2) throw DegenerateGraphError("sampling a node pair needs at least two nodes");
  std::uniform_int_distribution<NodeId> first(0, static_cast<NodeId>(n - 1));
  std::uniform_int_distribution<NodeId> second(0, static_cast<NodeId>(n - 2));
  const NodeId s = first(rng);
  NodeId t = second(rng);
  if (t >= s) ++t;
  return {s, t};
}

std::size_t bag_size_for(double sigma_st, double alpha, std::size_t bag_cap) {
  if (sigma_st <= 0.0) return 0;
  const double want = std::ceil(alpha * sigma_st);
  if (!(want < static_cast<double>(bag_cap))) return std::max<std::size_t>(bag_cap, 1);
  return std::max<std::size_t>(static_cast<std::size_t>(want), 1);
}

PathSampler::PathSampler(const Graph& g)
    : graph_(&g),
      fwd_dist_(g.num_nodes(), -1),
      bwd_dist_(g.num_nodes(), -1),
      fwd_sigma_(g.num_nodes(), 0.0),
      bwd_sigma_(g.num_nodes(), 0.0) {
  dag_.fwd_dist_ = &fwd_dist_;
  dag_.bwd_dist_ = &bwd_dist_;
  dag_.fwd_sigma_ = &fwd_sigma_;
  dag_.bwd_sigma_ = &bwd_sigma_;
}

void PathSampler::reset() {
  for (NodeId v : touched_) {
    fwd_dist_[v] = -1;
    bwd_dist_[v] = -1;
    fwd_sigma_[v] = 0.0;
    bwd_sigma_[v] = 0.0;
  }
  touched_.clear();
  fwd_frontier_.clear();
  bwd_frontier_.clear();
  dag_.meeting_.clear();
  dag_.meeting_cumulative_.clear();
  dag_.dist = SpDag::kUnreachable;
  dag_.sigma_st = 0.0;
}

// Expands the forward frontier by one level. Returns true when the new level
// touches nodes already labelled by the backward search.
bool PathSampler::expand_forward() {
  const Graph& g = *graph_;
  next_.clear();
  const int depth = fwd_depth_ + 1;
  for (NodeId u : fwd_frontier_) {
    for (NodeId w : g.out_neighbors(u)) {
      if (fwd_dist_[w] < 0) {
        if (bwd_dist_[w] < 0) touched_.push_back(w);
        fwd_dist_[w] = depth;
        next_.push_back(w);
      }
      if (fwd_dist_[w] == depth) fwd_sigma_[w] += fwd_sigma_[u];
    }
  }
  fwd_frontier_.swap(next_);
  fwd_depth_ = depth;
  bool met = false;
  for (NodeId w : fwd_frontier_) {
    if (bwd_dist_[w] >= 0) {
      dag_.meeting_.push_back(w);
      met = true;
    }
  }
  return met;
}

bool PathSampler::expand_backward() {
  const Graph& g = *graph_;
  next_.clear();
  const int depth = bwd_depth_ + 1;
  for (NodeId u : bwd_frontier_) {
    for (NodeId w : g.in_neighbors(u)) {
      if (bwd_dist_[w] < 0) {
        if (fwd_dist_[w] < 0) touched_.push_back(w);
        bwd_dist_[w] = depth;
        next_.push_back(w);
      }
      if (bwd_dist_[w] == depth) bwd_sigma_[w] += bwd_sigma_[u];
    }
  }
  bwd_frontier_.swap(next_);
  bwd_depth_ = depth;
  bool met = false;
  for (NodeId w : bwd_frontier_) {
    if (fwd_dist_[w] >= 0) {
      dag_.meeting_.push_back(w);
      met = true;
    }
  }
  return met;
}

void PathSampler::finish_meeting() {
  // Before the meeting level no node carried both labels, so every meeting
  // node sits at the same total distance; keep only the minimum defensively.
  int best = std::numeric_limits<int>::max();
  for (NodeId w : dag_.meeting_) best = std::min(best, fwd_dist_[w] + bwd_dist_[w]);
  std::erase_if(dag_.meeting_,
                [&](NodeId w) { return fwd_dist_[w] + bwd_dist_[w] != best; });
  double total = 0.0;
  for (NodeId w : dag_.meeting_) {
    total += fwd_sigma_[w] * bwd_sigma_[w];
    dag_.meeting_cumulative_.push_back(total);
  }
  dag_.dist = static_cast<std::uint32_t>(best);
  dag_.sigma_st = total;
}

const SpDag& PathSampler::bidirectional_bfs(NodeId s, NodeId t) {
  if (s == t) throw ParameterError("bidirectional_bfs requires distinct endpoints");
  const Graph& g = *graph_;
  reset();
  dag_.source = s;
  dag_.target = t;

  fwd_dist_[s] = 0;
  fwd_sigma_[s] = 1.0;
  bwd_dist_[t] = 0;
  bwd_sigma_[t] = 1.0;
  touched_.push_back(s);
  touched_.push_back(t);
  fwd_frontier_.push_back(s);
  bwd_frontier_.push_back(t);
  fwd_depth_ = 0;
  bwd_depth_ = 0;
  std::size_t fwd_cost = g.out_degree(s);
  std::size_t bwd_cost = g.in_degree(t);

  while (!fwd_frontier_.empty() && !bwd_frontier_.empty()) {
    bool met;
    if (fwd_cost <= bwd_cost) {
      met = expand_forward();
      fwd_cost = 0;
      for (NodeId v : fwd_frontier_) fwd_cost += g.out_degree(v);
    } else {
      met = expand_backward();
      bwd_cost = 0;
      for (NodeId v : bwd_frontier_) bwd_cost += g.in_degree(v);
    }
    if (met) {
      finish_meeting();
      return dag_;
    }
  }
  return dag_;
}

void PathSampler::walk(NodeId meet, std::span<NodeId> full_path, Rng& rng) const {
  const Graph& g = *graph_;
  int k = fwd_dist_[meet];
  full_path[static_cast<std::size_t>(k)] = meet;

  // Towards s: predecessor y of x with weight sigma_s(y) / sigma_s(x).
  NodeId x = meet;
  while (k > 0) {
    auto preds = g.in_neighbors(x);
    const std::size_t idx =
        pick_weighted(preds.size(), fwd_sigma_[x], rng, [&](std::size_t i) {
          return fwd_dist_[preds[i]] == k - 1 ? fwd_sigma_[preds[i]] : 0.0;
        });
    x = preds[idx];
    --k;
    full_path[static_cast<std::size_t>(k)] = x;
  }

  // Towards t: successor y of x with weight sigma_t(y) / sigma_t(x).
  x = meet;
  int remaining = bwd_dist_[meet];
  std::size_t pos = static_cast<std::size_t>(fwd_dist_[meet]);
  while (remaining > 0) {
    auto succs = g.out_neighbors(x);
    const std::size_t idx =
        pick_weighted(succs.size(), bwd_sigma_[x], rng, [&](std::size_t i) {
          return bwd_dist_[succs[i]] == remaining - 1 ? bwd_sigma_[succs[i]] : 0.0;
        });
    x = succs[idx];
    --remaining;
    full_path[++pos] = x;
  }
}

void PathSampler::sample_bag(const SpDag& dag, double alpha, std::size_t bag_cap,
                             Rng& rng, PathBag& out) {
  if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
  if (&dag != &dag_) throw ParameterError("sample_bag needs this sampler's current DAG");
  out.clear();
  out.source = dag.source;
  out.target = dag.target;
  if (!dag.reachable()) return;

  out.path_length = dag.dist - 1;
  out.bag_size = bag_size_for(dag.sigma_st, alpha, bag_cap);
  out.nodes.resize(out.bag_size * out.path_length);
  scratch_path_.resize(dag.dist + 1);

  const auto& cumulative = dag.meeting_cumulative_;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t p = 0; p < out.bag_size; ++p) {
    const double r = unit(rng) * dag.sigma_st;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    if (it == cumulative.end()) --it;
    const NodeId meet = dag.meeting_[static_cast<std::size_t>(it - cumulative.begin())];
    walk(meet, scratch_path_, rng);
    std::copy(scratch_path_.begin() + 1, scratch_path_.end() - 1,
              out.nodes.begin() + static_cast<std::ptrdiff_t>(p * out.path_length));
  }
}

PathBag PathSampler::sample_bag(const SpDag& dag, double alpha, std::size_t bag_cap,
                                Rng& rng) {
  PathBag bag;
  sample_bag(dag, alpha, bag_cap, rng, bag);
  return bag;
}

void PathSampler::draw(Rng& rng, double alpha, std::size_t bag_cap, PathBag& out) {
  const auto [s, t] = sample_pair(*graph_, rng);
  const SpDag& dag = bidirectional_bfs(s, t);
  sample_bag(dag, alpha, bag_cap, rng, out);
}

}  // namespace bcapprox
