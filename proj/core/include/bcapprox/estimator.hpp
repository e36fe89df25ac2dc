#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bcapprox/graph.hpp"
#include "bcapprox/path_sampler.hpp"

namespace bcapprox {

// Running sums over a sample of path bags, with f_v(tau) = (paths in tau
// through v) / |tau|:
//   b_sum(v)    = sum_i f_v(tau_i)
//   w_sum(v)    = sum_i f_v(tau_i)^2
//   r_sum(v,x)  = sum_i sigma_{x,i} f_v(tau_i)   for x in [0, c)
// plus the first two moments of X_i = sum_v f_v(tau_i), used by the
// average-path-length bound.
class EstimatorState {
 public:
  EstimatorState() = default;
  EstimatorState(std::size_t num_nodes, std::size_t trials);

  // Folds one sample in. `signs` must have exactly trials() entries, each
  // -1 or +1. Throws IntegrityError if a bag endpoint appears as an internal
  // node, ParameterError on a bad sign column.
  void ingest(const PathBag& bag, std::span<const std::int8_t> signs);

  // Adds another state over the same node set and trial count.
  void merge(const EstimatorState& other);

  std::size_t num_nodes() const noexcept { return b_sum_.size(); }
  std::size_t trials() const noexcept { return trials_; }
  std::uint64_t samples() const noexcept { return m_; }

  double b_sum(NodeId v) const noexcept { return b_sum_[v]; }
  double w_sum(NodeId v) const noexcept { return w_sum_[v]; }
  double r_sum(NodeId v, std::size_t x) const noexcept { return r_sum_[v * trials_ + x]; }
  std::span<const double> b_sums() const noexcept { return b_sum_; }
  std::span<const double> w_sums() const noexcept { return w_sum_; }

  double x_sum() const noexcept { return x_sum_; }
  double x_sq_sum() const noexcept { return x_sq_sum_; }

  // b~(v) = b_sum(v) / m; all zero when m == 0.
  std::vector<double> estimates() const;
  // sum_v b~(v), the empirical average number of internal nodes per path.
  double rho_tilde() const noexcept { return m_ == 0 ? 0.0 : x_sum_ / static_cast<double>(m_); }

 private:
  std::size_t trials_ = 0;
  std::uint64_t m_ = 0;
  std::vector<double> b_sum_;
  std::vector<double> w_sum_;
  std::vector<double> r_sum_;  // node-major, trials_ per node
  double x_sum_ = 0.0;
  double x_sq_sum_ = 0.0;
  std::vector<std::pair<NodeId, std::uint32_t>> scratch_;
};

// Draws a column of `trials` fair Rademacher signs.
void draw_rademacher(Rng& rng, std::span<std::int8_t> out);

// Empirical-peeling partition: node v goes to class
//   j = ceil(log_a(min(1 / w~_v, |S'|)))
// with w~_v = w_sum(v) / |S'| from an independent first-phase sample.
// Class indices are kept as computed; only nonempty classes are listed.
class Partition {
 public:
  Partition() = default;
  Partition(std::vector<std::uint32_t> class_of, double base);

  std::uint32_t class_of(NodeId v) const noexcept { return class_of_[v]; }
  std::span<const std::uint32_t> assignment() const noexcept { return class_of_; }
  // Distinct class indices in increasing order.
  std::span<const std::uint32_t> classes() const noexcept { return classes_; }
  // Position of class index j in classes(); classes() are dense by slot.
  std::size_t slot_of_node(NodeId v) const noexcept { return slot_[v]; }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  std::size_t class_size(std::size_t slot) const noexcept { return sizes_[slot]; }
  double base() const noexcept { return base_; }

 private:
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> classes_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> sizes_;
  double base_ = 2.0;
};

// Class index for one node; exposed for tests and diagnostics.
std::uint32_t peeling_class(double wimpy, std::uint64_t first_phase_size, double base);

// Throws ParameterError when base <= 1 or the state holds no samples.
Partition build_partition(const EstimatorState& first_phase, double base);

// Per class slot: (1/c) sum_x max_{v in class} r_sum(v,x) / m. Not clamped.
std::vector<double> mcera(const EstimatorState& state, const Partition& partition);

// Per class slot: max_{v in class} w_sum(v) / m.
std::vector<double> wimpy_per_class(const EstimatorState& state, const Partition& partition);

}  // namespace bcapprox
