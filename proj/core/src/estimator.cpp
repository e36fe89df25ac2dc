#include "bcapprox/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bcapprox/error.hpp"

namespace bcapprox {

EstimatorState::EstimatorState(std::size_t num_nodes, std::size_t trials)
    : trials_(trials),
      b_sum_(num_nodes, 0.0),
      w_sum_(num_nodes, 0.0),
      r_sum_(num_nodes * trials, 0.0) {}

void EstimatorState::ingest(const PathBag& bag, std::span<const std::int8_t> signs) {
  if (signs.size() != trials_) throw ParameterError("sign column length differs from trials");
  for (std::int8_t s : signs) {
    if (s != 1 && s != -1) throw ParameterError("Rademacher signs must be -1 or +1");
  }
  bag.multiplicities(scratch_);
  for (const auto& [v, count] : scratch_) {
    if (v == bag.source || v == bag.target) {
      throw IntegrityError("bag endpoint appears as an internal node");
    }
    if (v >= b_sum_.size()) throw IntegrityError("bag node id out of range");
  }
  ++m_;
  if (scratch_.empty()) return;

  const double inv_size = 1.0 / static_cast<double>(bag.bag_size);
  double x = 0.0;
  for (const auto& [v, count] : scratch_) {
    const double f = static_cast<double>(count) * inv_size;
    b_sum_[v] += f;
    w_sum_[v] += f * f;
    double* r = r_sum_.data() + static_cast<std::size_t>(v) * trials_;
    for (std::size_t j = 0; j < trials_; ++j) r[j] += signs[j] * f;
    x += f;
  }
  x_sum_ += x;
  x_sq_sum_ += x * x;
}

void EstimatorState::merge(const EstimatorState& other) {
  if (other.num_nodes() != num_nodes() || other.trials_ != trials_) {
    throw ParameterError("cannot merge estimator states of different shape");
  }
  m_ += other.m_;
  for (std::size_t i = 0; i < b_sum_.size(); ++i) b_sum_[i] += other.b_sum_[i];
  for (std::size_t i = 0; i < w_sum_.size(); ++i) w_sum_[i] += other.w_sum_[i];
  for (std::size_t i = 0; i < r_sum_.size(); ++i) r_sum_[i] += other.r_sum_[i];
  x_sum_ += other.x_sum_;
  x_sq_sum_ += other.x_sq_sum_;
}

std::vector<double> EstimatorState::estimates() const {
  std::vector<double> out(b_sum_.size(), 0.0);
  if (m_ == 0) return out;
  const double inv_m = 1.0 / static_cast<double>(m_);
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = b_sum_[v] * inv_m;
  return out;
}

void draw_rademacher(Rng& rng, std::span<std::int8_t> out) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i % 64 == 0) bits = rng();
    out[i] = (bits & 1u) ? std::int8_t{1} : std::int8_t{-1};
    bits >>= 1;
  }
}

Partition::Partition(std::vector<std::uint32_t> class_of, double base)
    : class_of_(std::move(class_of)), base_(base) {
  classes_ = class_of_;
  std::sort(classes_.begin(), classes_.end());
  classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
  slot_.resize(class_of_.size());
  sizes_.assign(classes_.size(), 0);
  for (std::size_t v = 0; v < class_of_.size(); ++v) {
    const auto it = std::lower_bound(classes_.begin(), classes_.end(), class_of_[v]);
    slot_[v] = static_cast<std::size_t>(it - classes_.begin());
    ++sizes_[slot_[v]];
  }
}

std::uint32_t peeling_class(double wimpy, std::uint64_t first_phase_size, double base) {
  if (!(base > 1.0)) throw ParameterError("peeling base must be > 1");
  if (first_phase_size == 0) throw ParameterError("first-phase sample is empty");
  const double cap = static_cast<double>(first_phase_size);
  const double arg = wimpy > 0.0 ? std::min(1.0 / wimpy, cap) : cap;
  // log_a of an exact power of a can land a few ulps above the integer.
  const double j = std::ceil(std::log(arg) / std::log(base) - 1e-12);
  return static_cast<std::uint32_t>(std::max(0.0, j));
}

Partition build_partition(const EstimatorState& first_phase, double base) {
  if (!(base > 1.0)) throw ParameterError("peeling base must be > 1");
  const std::uint64_t m = first_phase.samples();
  if (m == 0) throw ParameterError("first-phase sample is empty");
  std::vector<std::uint32_t> class_of(first_phase.num_nodes());
  const double inv_m = 1.0 / static_cast<double>(m);
  for (NodeId v = 0; v < class_of.size(); ++v) {
    class_of[v] = peeling_class(first_phase.w_sum(v) * inv_m, m, base);
  }
  return Partition(std::move(class_of), base);
}

std::vector<double> mcera(const EstimatorState& state, const Partition& partition) {
  const std::size_t t = partition.num_classes();
  const std::size_t c = state.trials();
  std::vector<double> out(t, 0.0);
  if (c == 0 || state.samples() == 0) return out;

  std::vector<double> best(t * c, -std::numeric_limits<double>::infinity());
  for (NodeId v = 0; v < state.num_nodes(); ++v) {
    double* row = best.data() + partition.slot_of_node(v) * c;
    for (std::size_t x = 0; x < c; ++x) row[x] = std::max(row[x], state.r_sum(v, x));
  }
  const double scale = 1.0 / (static_cast<double>(c) * static_cast<double>(state.samples()));
  for (std::size_t j = 0; j < t; ++j) {
    double acc = 0.0;
    for (std::size_t x = 0; x < c; ++x) acc += best[j * c + x];
    out[j] = acc * scale;
  }
  return out;
}

std::vector<double> wimpy_per_class(const EstimatorState& state, const Partition& partition) {
  std::vector<double> out(partition.num_classes(), 0.0);
  if (state.samples() == 0) return out;
  for (NodeId v = 0; v < state.num_nodes(); ++v) {
    double& slot = out[partition.slot_of_node(v)];
    slot = std::max(slot, state.w_sum(v));
  }
  const double inv_m = 1.0 / static_cast<double>(state.samples());
  for (double& w : out) w *= inv_m;
  return out;
}

}  // namespace bcapprox
