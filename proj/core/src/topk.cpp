#include "bcapprox/topk.hpp"

#include <algorithm>
#include <cmath>

#include "bcapprox/bounds.hpp"
#include "bcapprox/engine.hpp"
#include "bcapprox/error.hpp"
#include "bcapprox/estimator.hpp"
#include "bcapprox/sampling.hpp"

namespace bcapprox {

double TopKConfig::alpha() const { return std::log(1.0 / lambda); }

void TopKConfig::validate(std::size_t num_nodes) const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ParameterError(what);
  };
  require(k >= 1 && k < num_nodes, "k must satisfy 1 <= k < n");
  require(eta > 0.0 && eta < 1.0, "eta must lie in (0,1)");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  require(trials >= 1, "at least one Monte-Carlo trial");
  require(lambda > 0.0 && lambda < 1.0, "lambda must lie in (0,1)");
  require(peeling_base > 1.0, "peeling base must be > 1");
  require(ratio > 1.0, "schedule ratio must be > 1");
  require(kappa >= 1, "kappa must be positive");
  require(first_phase_cap >= 1, "first-phase cap must be positive");
  require(bag_cap >= 1, "bag cap must be positive");
  require(!max_seconds || *max_seconds > 0.0, "time budget must be positive");
}

double kth_lower_bound(std::span<const double> lowers, std::size_t k) {
  if (k < 1 || k > lowers.size()) throw ParameterError("k out of range");
  std::vector<double> copy(lowers.begin(), lowers.end());
  auto nth = copy.begin() + static_cast<std::ptrdiff_t>(k - 1);
  std::nth_element(copy.begin(), nth, copy.end(), std::greater<>());
  return *nth;
}

std::vector<NodeId> candidate_set(std::span<const double> uppers, double threshold) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < uppers.size(); ++v) {
    if (uppers[v] >= threshold) out.push_back(v);
  }
  return out;
}

bool relative_width_ok(double estimate, double lower, double upper, double eta) {
  return estimate / (1.0 + eta) <= lower && upper <= estimate / (1.0 - eta);
}

TopKResult run_topk(const Graph& g, const TopKConfig& cfg) {
  const std::size_t n = g.num_nodes();
  if (n < 2) throw DegenerateGraphError("betweenness needs at least two nodes");
  cfg.validate(n);

  const auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (cfg.max_seconds) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(*cfg.max_seconds));
  }
  auto expired = [&] { return deadline && Clock::now() > *deadline; };

  TopKResult result;
  result.config = cfg;
  SampleDriver driver(g, cfg.alpha(), cfg.bag_cap, cfg.seed, cfg.threads);

  // Phase 1: sample one bag at a time until k nodes were each internal to
  // paths of at least kappa distinct samples.
  EstimatorState first(n, 0);
  std::vector<std::uint32_t> hits(n, 0);
  std::size_t ready = 0;
  PathBag bag;
  std::vector<std::int8_t> signs;
  std::vector<std::pair<NodeId, std::uint32_t>> mult;
  while (ready < cfg.k) {
    if (first.samples() >= cfg.first_phase_cap) {
      result.first_phase_capped = true;
      break;
    }
    if (first.samples() % 32 == 0 && expired()) break;
    driver.draw_one(Stream::kPeeling, first.samples(), 0, bag, signs);
    first.ingest(bag, signs);
    bag.multiplicities(mult);
    for (const auto& [v, count] : mult) {
      if (++hits[v] == cfg.kappa) ++ready;
    }
  }
  result.m_prime = first.samples();

  auto finish = [&](bool guaranteed, const EstimatorState& state,
                    const std::vector<TopKEntry>& entries, double threshold) {
    result.guaranteed = guaranteed;
    result.m_final = state.samples();
    result.entries = entries;
    std::sort(result.entries.begin(), result.entries.end(),
              [](const TopKEntry& a, const TopKEntry& b) {
                return a.estimate != b.estimate ? a.estimate > b.estimate : a.node < b.node;
              });
    result.threshold = threshold;
    result.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  };

  EstimatorState state(n, cfg.trials);
  if (ready < cfg.k && !result.first_phase_capped) return finish(false, state, {}, 0.0);

  const Partition partition = build_partition(first, cfg.peeling_base);
  const std::size_t t = partition.num_classes();
  result.classes = t;

  // Phase 2: progressive sampling on a fresh sample.
  std::uint64_t target = 2 * result.m_prime;
  if (cfg.max_samples != 0) target = std::min(target, cfg.max_samples);
  std::vector<double> lower(n), upper(n);
  std::vector<TopKEntry> entries;
  double threshold = 0.0;
  for (unsigned i = 1;; ++i) {
    const std::uint64_t have = state.samples();
    if (driver.fill(state, Stream::kProgressive, have, target - have, deadline) < target - have) {
      return finish(false, state, entries, threshold);
    }
    TopKIteration it;
    it.index = i;
    it.samples = state.samples();
    it.log_term = bounds::schedule_log_term(cfg.delta, t, i, bounds::ScheduleMode::kTopK);
    const auto classes = evaluate_classes(state, partition, it.log_term);
    for (const auto& c : classes) it.max_eps = std::max(it.max_eps, c.eps);

    const auto est = state.estimates();
    for (NodeId v = 0; v < n; ++v) {
      const double eps = classes[partition.slot_of_node(v)].eps;
      lower[v] = std::max(0.0, est[v] - eps);
      upper[v] = std::min(1.0, est[v] + eps);
    }
    threshold = kth_lower_bound(lower, cfg.k);
    entries.clear();
    for (NodeId v : candidate_set(upper, threshold)) {
      entries.push_back({v, est[v], lower[v], upper[v]});
      if (!relative_width_ok(est[v], lower[v], upper[v], cfg.eta)) ++it.failing;
    }
    it.threshold = threshold;
    it.candidates = entries.size();
    const bool accepted = it.failing == 0;
    result.iterations.push_back(it);

    if (accepted) return finish(true, state, entries, threshold);
    if (expired()) return finish(false, state, entries, threshold);
    if (cfg.max_samples != 0 && state.samples() >= cfg.max_samples) {
      return finish(false, state, entries, threshold);
    }
    target = next_m(state.samples(), cfg.ratio,
                    cfg.max_samples != 0 ? cfg.max_samples : UINT64_MAX);
  }
}

}  // namespace bcapprox
