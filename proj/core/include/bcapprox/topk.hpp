#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bcapprox/graph.hpp"
#include "bcapprox/path_sampler.hpp"

namespace bcapprox {

struct TopKConfig {
  std::size_t k = 10;
  double eta = 0.1;
  double delta = 0.05;
  std::size_t trials = 25;
  double lambda = 0.1;
  double peeling_base = 2.0;
  double ratio = 1.2;
  // First phase stops once k nodes were internal in >= kappa samples each.
  std::uint32_t kappa = 5;
  // Hard stop for the first phase on graphs with fewer than k central nodes.
  std::uint64_t first_phase_cap = 1'000'000;
  std::size_t bag_cap = kDefaultBagCap;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::optional<double> max_seconds;
  // 0 means unlimited.
  std::uint64_t max_samples = 0;

  double alpha() const;
  void validate(std::size_t num_nodes) const;
};

struct TopKEntry {
  NodeId node = 0;
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct TopKIteration {
  unsigned index = 0;
  std::uint64_t samples = 0;
  double log_term = 0.0;
  double threshold = 0.0;
  std::size_t candidates = 0;
  std::size_t failing = 0;  // candidates violating the relative-width check
  double max_eps = 0.0;
};

struct TopKResult {
  TopKConfig config;
  double threshold = 0.0;           // k-th largest lower bound
  std::vector<TopKEntry> entries;   // sorted by estimate, descending
  std::uint64_t m_prime = 0;
  bool first_phase_capped = false;
  std::size_t classes = 0;
  std::uint64_t m_final = 0;
  std::vector<TopKIteration> iterations;
  bool guaranteed = false;
  double wall_time_s = 0.0;
};

// k-th largest value (1-based k). Throws ParameterError unless 1 <= k <= size.
double kth_lower_bound(std::span<const double> lowers, std::size_t k);

// Nodes whose upper bound reaches `threshold`.
std::vector<NodeId> candidate_set(std::span<const double> uppers, double threshold);

// b~/(1+eta) <= lower and upper <= b~/(1-eta).
bool relative_width_ok(double estimate, double lower, double upper, double eta);

// Progressive top-k search. With probability >= 1 - delta the returned set
// contains every true top-k node, each estimate is within eta * b(v) of the
// truth, and extra nodes have b(v) >= b(v_k) ((1-eta)/(1+eta))^2.
TopKResult run_topk(const Graph& g, const TopKConfig& cfg);

}  // namespace bcapprox
