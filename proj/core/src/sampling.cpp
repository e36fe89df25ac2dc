#include "bcapprox/sampling.hpp"

#include <algorithm>
#include <thread>

#include "bcapprox/error.hpp"
#include "bcapprox/sample_log.hpp"

namespace bcapprox {

SampleDriver::SampleDriver(const Graph& g, double alpha, std::size_t bag_cap,
                           std::uint64_t seed, unsigned threads)
    : graph_(&g), alpha_(alpha), bag_cap_(bag_cap), seed_(seed) {
  if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
  if (bag_cap == 0) throw ParameterError("bag cap must be positive");
  const unsigned count = std::max(1u, threads);
  workers_.reserve(count);
  for (unsigned i = 0; i < count; ++i) workers_.emplace_back(g);
}

void SampleDriver::draw_with(Worker& w, Stream stream, std::uint64_t index,
                             std::size_t trials) {
  Rng rng = substream(seed_, stream, index);
  w.sampler.draw(rng, alpha_, bag_cap_, w.bag);
  w.signs.resize(trials);
  draw_rademacher(rng, w.signs);
}

void SampleDriver::draw_one(Stream stream, std::uint64_t index, std::size_t trials,
                            PathBag& bag, std::vector<std::int8_t>& signs) {
  Worker& w = workers_.front();
  draw_with(w, stream, index, trials);
  bag = w.bag;
  signs = w.signs;
}

std::uint64_t SampleDriver::fill_serial(Worker& w, EstimatorState& state, Stream stream,
                                        std::uint64_t first, std::uint64_t count,
                                        std::optional<Clock::time_point> deadline,
                                        bool log) {
  for (std::uint64_t k = 0; k < count; ++k) {
    if (deadline && k % 32 == 0 && Clock::now() > *deadline) return k;
    draw_with(w, stream, first + k, state.trials());
    state.ingest(w.bag, w.signs);
    if (log && log_ != nullptr) write_sample_record(*log_, w.bag, w.signs);
  }
  return count;
}

std::uint64_t SampleDriver::fill(EstimatorState& state, Stream stream, std::uint64_t first,
                                 std::uint64_t count,
                                 std::optional<Clock::time_point> deadline) {
  const std::uint64_t parts = std::min<std::uint64_t>(workers_.size(), count);
  if (parts <= 1 || log_ != nullptr) {
    return fill_serial(workers_.front(), state, stream, first, count, deadline, true);
  }

  std::vector<EstimatorState> shards;
  shards.reserve(parts);
  for (std::uint64_t p = 0; p < parts; ++p) shards.emplace_back(state.num_nodes(), state.trials());
  std::vector<std::uint64_t> done(parts, 0);
  std::vector<std::thread> pool;
  pool.reserve(parts);
  for (std::uint64_t p = 0; p < parts; ++p) {
    const std::uint64_t begin = first + count * p / parts;
    const std::uint64_t end = first + count * (p + 1) / parts;
    pool.emplace_back([&, p, begin, end] {
      done[p] = fill_serial(workers_[p], shards[p], stream, begin, end - begin, deadline, false);
    });
  }
  for (auto& t : pool) t.join();

  std::uint64_t total = 0;
  for (std::uint64_t p = 0; p < parts; ++p) {
    state.merge(shards[p]);
    total += done[p];
  }
  return total;
}

}  // namespace bcapprox
