#include "bcapprox/engine.hpp"

#include <algorithm>
#include <cmath>

#include "bcapprox/error.hpp"
#include "bcapprox/estimator.hpp"
#include "bcapprox/sampling.hpp"

namespace bcapprox {

double RunConfig::alpha() const { return std::log(1.0 / lambda); }

void RunConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ParameterError(what);
  };
  require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0,1)");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  require(trials >= 1, "at least one Monte-Carlo trial");
  require(lambda > 0.0 && lambda < 1.0, "lambda must lie in (0,1)");
  require(peeling_base > 1.0, "peeling base must be > 1");
  require(ratio > 1.0, "schedule ratio must be > 1");
  require(bag_cap >= 1, "bag cap must be positive");
  require(!max_seconds || *max_seconds > 0.0, "time budget must be positive");
  require(!diameter_override || *diameter_override >= 2, "vertex diameter is at least 2");
}

double IterationRecord::max_eps() const {
  double out = 0.0;
  for (const auto& c : classes) out = std::max(out, c.eps);
  return out;
}

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kEpsMet:
      return "eps_met";
    case StopReason::kMhatReached:
      return "mhat_reached";
    case StopReason::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

std::uint64_t first_phase_size(double epsilon, double delta) {
  return std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(std::log(1.0 / delta) / epsilon)));
}

std::uint64_t schedule_start(double epsilon, double delta, double nu_hat,
                             std::size_t classes) {
  const double l1 = bounds::schedule_log_term(delta, classes, 1, bounds::ScheduleMode::kMain);
  auto fits = [&](std::uint64_t m) { return bounds::eps_bound(0.0, nu_hat, m, l1) <= epsilon; };
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << 40;
  if (fits(lo)) return lo;
  // Invariant: !fits(lo), fits(hi).
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::uint64_t next_m(std::uint64_t m_prev, double ratio, std::uint64_t cap) {
  if (m_prev >= cap) return cap;
  const double grown = std::ceil(ratio * static_cast<double>(m_prev));
  std::uint64_t next = grown >= static_cast<double>(cap) ? cap : static_cast<std::uint64_t>(grown);
  next = std::max(next, m_prev + 1);
  return std::min(next, cap);
}

std::vector<ClassRecord> evaluate_classes(const EstimatorState& state,
                                          const Partition& partition, double log_term) {
  const auto mc = mcera(state, partition);
  const auto wimpy = wimpy_per_class(state, partition);
  const std::uint64_t m = state.samples();
  std::vector<ClassRecord> out(partition.num_classes());
  for (std::size_t j = 0; j < out.size(); ++j) {
    ClassRecord& rec = out[j];
    rec.index = partition.classes()[j];
    rec.size = partition.class_size(j);
    rec.mcera = mc[j];
    rec.wimpy = std::min(wimpy[j], 1.0);
    rec.nu = std::min(bounds::var_upper_bound(rec.wimpy, m, log_term), 0.25);
    const double era = bounds::era_upper_bound(rec.mcera, rec.wimpy, state.trials(), m, log_term);
    rec.eps = bounds::eps_bound(era, rec.nu, m, log_term);
  }
  return out;
}

RunReport run(const Graph& g, const RunConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_nodes();
  if (n < 2) throw DegenerateGraphError("betweenness needs at least two nodes");

  const auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (cfg.max_seconds) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(*cfg.max_seconds));
  }

  RunReport report;
  report.config = cfg;
  report.nodes = n;
  report.edges = g.num_edges();
  report.directed = g.directed();
  if (cfg.diameter_override) {
    report.diameter = {*cfg.diameter_override, true};
  } else {
    report.diameter = vertex_diameter_upper_bound(g, cfg.diameter_pivots, cfg.seed);
  }
  const double diameter = report.diameter.value;

  SampleDriver driver(g, cfg.alpha(), cfg.bag_cap, cfg.seed, cfg.threads);
  auto finish = [&](StopReason reason, const EstimatorState& state) {
    report.stop = reason;
    report.guaranteed = reason != StopReason::kBudgetExhausted;
    report.m_final = state.samples();
    report.estimates = state.estimates();
    report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
  };

  // Phase 1: an independent sample S' fixes the partition and the m-hat cap.
  report.m_prime = first_phase_size(cfg.epsilon, cfg.delta);
  EstimatorState first(n, 0);
  if (driver.fill(first, Stream::kPeeling, 0, report.m_prime, deadline) < report.m_prime) {
    return finish(StopReason::kBudgetExhausted, first);
  }
  const Partition partition = build_partition(first, cfg.peeling_base);
  report.classes = partition.num_classes();

  // The m-hat event gets delta/2, split evenly between the rho bound, the
  // variance bound and the sample-size theorem.
  const double share = cfg.delta / 6.0;
  report.rho_tilde = std::min(first.rho_tilde(), diameter);
  if (report.m_prime >= 2) {
    report.lambda_var = bounds::lambda_streaming(report.m_prime, first.x_sum(), first.x_sq_sum());
    report.rho = bounds::rho_bound_empirical_bernstein(report.rho_tilde, report.lambda_var,
                                                       diameter, report.m_prime, share);
  } else {
    report.rho = bounds::rho_bound_bernstein(report.rho_tilde, diameter, report.m_prime, share);
  }
  if (report.diameter.certified) report.rho = std::min(report.rho, diameter);

  double max_wimpy = 0.0;
  for (double w : first.w_sums()) max_wimpy = std::max(max_wimpy, w);
  max_wimpy /= static_cast<double>(report.m_prime);
  report.nu_hat = std::min(
      bounds::var_upper_bound(max_wimpy, report.m_prime, std::log(1.0 / share)), 0.25);
  report.sample_bound =
      bounds::sufficient_samples_detail(cfg.epsilon, share, report.nu_hat, report.rho);
  report.m_hat = report.sample_bound.samples;

  // Phase 2: progressive sampling on a fresh sample S.
  const std::size_t t = partition.num_classes();
  report.m_first = std::min(schedule_start(cfg.epsilon, cfg.delta, report.nu_hat, t),
                            report.m_hat);
  EstimatorState state(n, cfg.trials);
  std::uint64_t target = report.m_first;
  for (unsigned i = 1;; ++i) {
    const std::uint64_t have = state.samples();
    if (driver.fill(state, Stream::kProgressive, have, target - have, deadline) < target - have) {
      return finish(StopReason::kBudgetExhausted, state);
    }
    IterationRecord rec;
    rec.index = i;
    rec.samples = state.samples();
    rec.log_term = bounds::schedule_log_term(cfg.delta, t, i, bounds::ScheduleMode::kMain);
    rec.classes = evaluate_classes(state, partition, rec.log_term);
    const bool met = rec.max_eps() <= cfg.epsilon;
    report.iterations.push_back(std::move(rec));

    if (met) return finish(StopReason::kEpsMet, state);
    if (state.samples() >= report.m_hat) return finish(StopReason::kMhatReached, state);
    if (deadline && Clock::now() > *deadline) return finish(StopReason::kBudgetExhausted, state);
    target = next_m(state.samples(), cfg.ratio, report.m_hat);
  }
}

}  // namespace bcapprox
