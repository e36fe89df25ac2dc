#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bcapprox/bounds.hpp"
#include "bcapprox/diameter.hpp"
#include "bcapprox/graph.hpp"
#include "bcapprox/path_sampler.hpp"

namespace bcapprox {

// Parameters of an additive-approximation run. Defaults: 25 Monte-Carlo
// trials, lambda = 0.1 (alpha = ln 10), peeling base 2, schedule ratio 1.2.
struct RunConfig {
  double epsilon = 0.01;
  double delta = 0.05;
  std::size_t trials = 25;
  double lambda = 0.1;
  double peeling_base = 2.0;
  double ratio = 1.2;
  std::size_t bag_cap = kDefaultBagCap;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  unsigned diameter_pivots = 4;
  std::optional<std::uint32_t> diameter_override;
  std::optional<double> max_seconds;

  double alpha() const;
  // Throws ParameterError on any out-of-domain field.
  void validate() const;
};

struct ClassRecord {
  std::uint32_t index = 0;  // peeling class j
  std::size_t size = 0;     // nodes in the class
  double mcera = 0.0;
  double wimpy = 0.0;
  double nu = 0.0;
  double eps = 0.0;
};

struct IterationRecord {
  unsigned index = 0;
  std::uint64_t samples = 0;
  double log_term = 0.0;
  std::vector<ClassRecord> classes;

  double max_eps() const;
};

enum class StopReason { kEpsMet, kMhatReached, kBudgetExhausted };
const char* to_string(StopReason reason);

struct RunReport {
  RunConfig config;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool directed = false;

  DiameterBound diameter;
  std::uint64_t m_prime = 0;  // first-phase sample size
  double rho_tilde = 0.0;     // first-phase average internal path length
  double lambda_var = 0.0;    // first-phase empirical variance term
  double rho = 0.0;           // upper bound on the average internal path length
  double nu_hat = 0.0;        // upper bound on the maximum estimator variance
  bounds::SampleBound sample_bound;
  std::uint64_t m_hat = 0;
  std::uint64_t m_first = 0;
  std::uint64_t m_final = 0;
  std::size_t classes = 0;

  std::vector<IterationRecord> iterations;
  std::vector<double> estimates;  // by dense node id
  StopReason stop = StopReason::kBudgetExhausted;
  bool guaranteed = false;
  double wall_time_s = 0.0;
};

// m' = ceil(ln(1/delta) / epsilon).
std::uint64_t first_phase_size(double epsilon, double delta);

// Smallest m in [1, 2^40] with eps_bound(0, nu_hat, m, L1) <= epsilon, where
// L1 = schedule_log_term(delta, classes, 1, kMain).
std::uint64_t schedule_start(double epsilon, double delta, double nu_hat,
                             std::size_t classes);

// ceil(ratio * m_prev), at least m_prev + 1, capped at `cap`.
std::uint64_t next_m(std::uint64_t m_prev, double ratio, std::uint64_t cap);

class EstimatorState;
class Partition;

// Per-class MCERA, wimpy variance, variance bound and deviation bound for
// the current sample, all at the same log term. Variance bounds are capped
// at 1/4, the largest variance of a [0,1] variable.
std::vector<ClassRecord> evaluate_classes(const EstimatorState& state,
                                          const Partition& partition, double log_term);

// Two-phase progressive sampling. With probability >= 1 - delta every
// returned estimate is within epsilon of the true betweenness, unless the
// report says guaranteed == false (time budget hit).
RunReport run(const Graph& g, const RunConfig& cfg);

}  // namespace bcapprox
