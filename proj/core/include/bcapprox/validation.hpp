#pragma once

#include <cstddef>
#include <span>

#include "bcapprox/exact.hpp"
#include "bcapprox/topk.hpp"

// Checks of approximate results against exact betweenness.
namespace bcapprox {

// max_v |estimate(v) - exact(v)|.
double sup_deviation(std::span<const double> estimates, std::span<const double> exact);

struct TopKCheck {
  bool contains_top_k = false;  // every v with b(v) >= b(v_k) is reported
  bool relative_error = false;  // |b - b~| <= eta b for every entry
  bool extras_near = false;     // extra entries have b >= b(v_k) ((1-eta)/(1+eta))^2
  double kth_value = 0.0;       // b(v_k)
  bool ok() const noexcept { return contains_top_k && relative_error && extras_near; }
};

TopKCheck check_topk(const TopKResult& result, std::span<const double> exact, std::size_t k,
                     double eta);

}  // namespace bcapprox
