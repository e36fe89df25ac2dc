#pragma once

#include <cstdint>

#include "bcapprox/graph.hpp"

namespace bcapprox {

struct DiameterBound {
  // Upper bound on the vertex diameter: the largest number of nodes on any
  // shortest path (hop diameter + 1).
  std::uint32_t value = 0;
  // True when the value is a proven upper bound (undirected graphs). For
  // directed graphs the value is a heuristic estimate.
  bool certified = false;
};

// Undirected: per connected component, min over double-sweep pivots p of
// 2*ecc(p)+1, capped at the component size; the result is the max over
// components and is always >= the true vertex diameter.
// Directed: max over pivots of (forward depth + backward depth) + 1, capped
// at n. Not guaranteed.
DiameterBound vertex_diameter_upper_bound(const Graph& g, unsigned pivots,
                                          std::uint64_t seed);

}  // namespace bcapprox
