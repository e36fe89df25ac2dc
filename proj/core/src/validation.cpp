#include "bcapprox/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "bcapprox/error.hpp"

namespace bcapprox {

double sup_deviation(std::span<const double> estimates, std::span<const double> exact) {
  if (estimates.size() != exact.size()) throw ParameterError("size mismatch");
  double out = 0.0;
  for (std::size_t v = 0; v < exact.size(); ++v) {
    out = std::max(out, std::abs(estimates[v] - exact[v]));
  }
  return out;
}

TopKCheck check_topk(const TopKResult& result, std::span<const double> exact, std::size_t k,
                     double eta) {
  if (k < 1 || k > exact.size()) throw ParameterError("k out of range");
  std::vector<double> sorted(exact.begin(), exact.end());
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k - 1),
                   sorted.end(), std::greater<>());
  TopKCheck out;
  out.kth_value = sorted[k - 1];

  std::vector<char> reported(exact.size(), 0);
  for (const auto& e : result.entries) reported[e.node] = 1;

  out.contains_top_k = true;
  for (std::size_t v = 0; v < exact.size(); ++v) {
    if (exact[v] >= out.kth_value && !reported[v]) out.contains_top_k = false;
  }
  out.relative_error = true;
  out.extras_near = true;
  const double floor = out.kth_value * std::pow((1.0 - eta) / (1.0 + eta), 2);
  for (const auto& e : result.entries) {
    const double b = exact[e.node];
    if (std::abs(b - e.estimate) > eta * b) out.relative_error = false;
    if (b < out.kth_value && b < floor) out.extras_near = false;
  }
  return out;
}

}  // namespace bcapprox
