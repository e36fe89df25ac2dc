#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bcapprox/estimator.hpp"
#include "bcapprox/path_sampler.hpp"
#include "bcapprox/rng.hpp"

namespace bcapprox {

using Clock = std::chrono::steady_clock;

// Draws numbered samples into an estimator. Sample i of a stream always uses
// substream(seed, stream, i) for its pair, its paths and its sign column, in
// that order, so a sample is reproducible regardless of which worker drew it.
//
// With several workers, each fills a contiguous index block into its own
// shard; shards are merged into the target in block order.
class SampleDriver {
 public:
  SampleDriver(const Graph& g, double alpha, std::size_t bag_cap, std::uint64_t seed,
               unsigned threads);

  // Draws samples [first, first + count) of `stream` into `state`. Returns
  // the number ingested, which is smaller than `count` only if the deadline
  // passed. When a log stream is attached, every ingested sample is written
  // to it as one JSON line and filling runs on one worker.
  std::uint64_t fill(EstimatorState& state, Stream stream, std::uint64_t first,
                     std::uint64_t count, std::optional<Clock::time_point> deadline = {});

  // Draws one sample into `bag` and its `trials` signs into `signs`.
  void draw_one(Stream stream, std::uint64_t index, std::size_t trials, PathBag& bag,
                std::vector<std::int8_t>& signs);

  void attach_log(std::ostream* log) noexcept { log_ = log; }
  unsigned threads() const noexcept { return static_cast<unsigned>(workers_.size()); }

 private:
  struct Worker {
    explicit Worker(const Graph& g) : sampler(g) {}
    PathSampler sampler;
    PathBag bag;
    std::vector<std::int8_t> signs;
  };

  std::uint64_t fill_serial(Worker& w, EstimatorState& state, Stream stream,
                            std::uint64_t first, std::uint64_t count,
                            std::optional<Clock::time_point> deadline, bool log);
  void draw_with(Worker& w, Stream stream, std::uint64_t index, std::size_t trials);

  const Graph* graph_;
  double alpha_;
  std::size_t bag_cap_;
  std::uint64_t seed_;
  std::vector<Worker> workers_;
  std::ostream* log_ = nullptr;
};

}  // namespace bcapprox
