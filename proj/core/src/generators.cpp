#include "bcapprox/generators.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "bcapprox/error.hpp"
#include "bcapprox/rng.hpp"

namespace bcapprox::gen {

namespace {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

Graph build(std::size_t n, const EdgeList& edges, bool directed = false) {
  return Graph::from_edges(n, edges, directed);
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed, bool directed) {
  if (p < 0.0 || p > 1.0) throw ParameterError("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = directed ? 0 : u + 1; v < n; ++v) {
      if (u != v && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build(n, edges, directed);
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || n <= m) throw ParameterError("need 1 <= m < n");
  Rng rng(seed);
  EdgeList edges;
  // Every edge endpoint once per incidence, so a uniform pick is degree-biased.
  std::vector<NodeId> ends;
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  std::vector<NodeId> picked;
  for (NodeId u = static_cast<NodeId>(m + 1); u < n; ++u) {
    picked.clear();
    while (picked.size() < m) {
      std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
      const NodeId v = ends[pick(rng)];
      if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
    }
    for (NodeId v : picked) {
      edges.emplace_back(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  return build(n, edges);
}

Graph path(std::size_t n) {
  EdgeList edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return build(n, edges);
}

Graph cycle(std::size_t n) {
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u) edges.emplace_back(u, static_cast<NodeId>((u + 1) % n));
  return build(n, edges);
}

Graph star(std::size_t leaves) {
  EdgeList edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build(leaves + 1, edges);
}

Graph complete(std::size_t n) {
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build(n, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
  EdgeList edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return build(rows * cols, edges);
}

}  // namespace bcapprox::gen
