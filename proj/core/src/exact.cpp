#include "bcapprox/exact.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "bcapprox/error.hpp"

namespace bcapprox {
namespace {

struct BrandesWorkspace {
  explicit BrandesWorkspace(std::size_t n)
      : dist(n, -1), sigma(n, 0.0), delta(n, 0.0), acc(n, 0.0) {
    order.reserve(n);
  }
  std::vector<int> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;
  std::vector<double> acc;

  void single_source(const Graph& g, NodeId s) {
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId u = order[head];
      for (NodeId w : g.out_neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
      }
    }
    // Reverse BFS order: predecessors are in-neighbors one level closer.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId u : g.in_neighbors(w)) {
        if (dist[u] >= 0 && dist[u] + 1 == dist[w]) {
          delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
        }
      }
      if (w != s) acc[w] += delta[w];
    }
    for (NodeId v : order) {
      dist[v] = -1;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
  }
};

}  // namespace

CentralityMap brandes_exact(const Graph& g, const ExactOptions& options) {
  const std::size_t n = g.num_nodes();
  if (n < 2) throw DegenerateGraphError("betweenness needs at least two nodes");

  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
  std::vector<BrandesWorkspace> spaces;
  spaces.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) spaces.emplace_back(n);

  std::atomic<bool> timed_out{false};
  auto work = [&](unsigned w) {
    // Strided source assignment; each worker owns its accumulator.
    for (std::size_t s = w; s < n; s += workers) {
      if (options.deadline && (s / workers) % 64 == 0) {
        if (timed_out.load(std::memory_order_relaxed) ||
            std::chrono::steady_clock::now() > *options.deadline) {
          timed_out = true;
          return;
        }
      }
      spaces[w].single_source(g, static_cast<NodeId>(s));
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (timed_out) throw TimeoutError("exact betweenness exceeded its time budget");

  CentralityMap bc(n, 0.0);
  const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n - 1));
  for (const auto& space : spaces) {
    for (std::size_t v = 0; v < n; ++v) bc[v] += space.acc[v];
  }
  for (double& x : bc) x *= scale;
  return bc;
}

}  // namespace bcapprox
