#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bcapprox/estimator.hpp"
#include "bcapprox/path_sampler.hpp"

namespace bcapprox {

// JSON-lines sample log, one record per sample:
//   {"s":3,"t":7,"paths":[[4,5],[6,5]],"signs":[1,-1,...]}
// Node ids are dense internal ids. Replaying a log through ingest reproduces
// the estimator sums of the run that wrote it bit for bit.
struct LoggedSample {
  PathBag bag;
  std::vector<std::int8_t> signs;
};

void write_sample_record(std::ostream& out, const PathBag& bag,
                         std::span<const std::int8_t> signs);

// Throws ParseError on a malformed record.
std::vector<LoggedSample> read_sample_log(std::istream& in);

EstimatorState replay(std::span<const LoggedSample> samples, std::size_t num_nodes,
                      std::size_t trials);

}  // namespace bcapprox
