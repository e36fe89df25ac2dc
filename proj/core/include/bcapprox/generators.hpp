#pragma once

#include <cstdint>

#include "bcapprox/graph.hpp"

// Small deterministic graph families for tests, benchmarks and acceptance.
namespace bcapprox::gen {

// G(n, p) with a fixed seed. Directed graphs draw each ordered pair.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed, bool directed = false);

// Preferential attachment: each new node links to `m` distinct existing
// nodes chosen proportionally to degree. Starts from a clique on m+1 nodes.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
// Node 0 is the center.
Graph star(std::size_t leaves);
Graph complete(std::size_t n);
Graph grid(std::size_t rows, std::size_t cols);

}  // namespace bcapprox::gen
