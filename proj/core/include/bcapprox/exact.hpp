#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "bcapprox/graph.hpp"

namespace bcapprox {

// Per-node betweenness, normalized over ordered pairs:
//   b(v) = 1/(n(n-1)) * sum_{s != v != t} sigma_st(v) / sigma_st
// Undirected pairs are counted in both orders, so every entry is in [0,1].
using CentralityMap = std::vector<double>;

struct ExactOptions {
  unsigned threads = 1;
  // Throws TimeoutError if the computation has not finished by then.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Brandes' dependency accumulation. Path counts are doubles.
// Throws DegenerateGraphError when n < 2.
CentralityMap brandes_exact(const Graph& g, const ExactOptions& options = {});

}  // namespace bcapprox
