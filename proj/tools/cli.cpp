#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "bcapprox/bounds.hpp"
#include "bcapprox/diameter.hpp"
#include "bcapprox/engine.hpp"
#include "bcapprox/error.hpp"
#include "bcapprox/exact.hpp"
#include "bcapprox/graph.hpp"
#include "bcapprox/report.hpp"
#include "bcapprox/sampling.hpp"
#include "bcapprox/topk.hpp"
#include "bcapprox/validation.hpp"

namespace bcapprox::cli {

using nlohmann::json;

namespace {

// Flags shared by the graph-reading subcommands.
struct GraphArgs {
  std::string path;
  bool directed = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
  std::optional<double> max_seconds;
  std::string out;
};

struct SamplingArgs {
  double delta = 0.05;
  std::size_t trials = 25;
  double lambda = 0.1;
  double base = 2.0;
  double ratio = 1.2;
  std::size_t bag_cap = kDefaultBagCap;
};

void add_graph_flags(CLI::App& app, GraphArgs& a) {
  app.add_option("-g,--graph", a.path, "Edge-list file")->required();
  auto* dir = app.add_flag("--directed", a.directed, "Treat edges as directed");
  app.add_flag("--undirected{false}", a.directed, "Treat edges as undirected (default)")
      ->excludes(dir);
  app.add_option("--threads", a.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", a.seed, "Master seed");
  app.add_option("--max-seconds", a.max_seconds, "Wall-clock budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", a.out, "Output path (report JSON; CSV next to it)");
}

void add_sampling_flags(CLI::App& app, SamplingArgs& s) {
  app.add_option("-d,--delta", s.delta, "Failure probability")->check(CLI::Range(0.0, 1.0));
  app.add_option("-c,--trials", s.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
  app.add_option("--lambda", s.lambda, "Missing-path fraction; alpha = ln(1/lambda)");
  app.add_option("--base-a", s.base, "Peeling base");
  app.add_option("--ratio", s.ratio, "Schedule growth ratio");
  app.add_option("--bag-cap", s.bag_cap, "Maximum paths per sample")
      ->check(CLI::PositiveNumber);
}

json command_json(const std::string& name, const GraphArgs& a) {
  return {{"subcommand", name},
          {"graph", a.path},
          {"directed", a.directed},
          {"seed", a.seed},
          {"threads", a.threads},
          {"max_seconds", a.max_seconds ? json(*a.max_seconds) : json(nullptr)},
          {"out", a.out}};
}

std::optional<Clock::time_point> deadline_from(const std::optional<double>& seconds) {
  if (!seconds) return std::nullopt;
  return Clock::now() +
         std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
}

std::filesystem::path sibling(const std::string& out, const char* ext) {
  std::filesystem::path p(out);
  p.replace_extension(ext);
  return p;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p);
  if (!f) throw Error("cannot write '" + p.string() + "'");
  return f;
}

void emit(const json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    auto f = open_out(out_path);
    f << doc.dump(2) << '\n';
  }
}

// ---- approx ---------------------------------------------------------------

struct ApproxArgs {
  GraphArgs graph;
  SamplingArgs sampling;
  double epsilon = 0.01;
  std::optional<std::uint32_t> diameter_override;
  bool no_timing = false;
};

void add_approx_flags(CLI::App& app, ApproxArgs& a) {
  add_graph_flags(app, a.graph);
  add_sampling_flags(app, a.sampling);
  app.add_option("-e,--epsilon", a.epsilon, "Additive accuracy")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--diameter-override", a.diameter_override,
                 "Vertex-diameter upper bound to use instead of the estimate");
  app.add_flag("--no-timing", a.no_timing, "Omit wall-clock time from the report");
}

RunConfig run_config(const ApproxArgs& a) {
  RunConfig cfg;
  cfg.epsilon = a.epsilon;
  cfg.delta = a.sampling.delta;
  cfg.trials = a.sampling.trials;
  cfg.lambda = a.sampling.lambda;
  cfg.peeling_base = a.sampling.base;
  cfg.ratio = a.sampling.ratio;
  cfg.bag_cap = a.sampling.bag_cap;
  cfg.seed = a.graph.seed;
  cfg.threads = a.graph.threads;
  cfg.diameter_override = a.diameter_override;
  cfg.max_seconds = a.graph.max_seconds;
  return cfg;
}

int do_approx(const ApproxArgs& a, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = run_config(a);
  cfg.validate();
  json cmd = command_json("approx", a.graph);
  err << "config " << json{{"command", cmd}, {"config", cfg}}.dump() << '\n';

  const Graph g = load_edge_list_file(a.graph.path, a.graph.directed);
  if (g.directed() && !a.diameter_override) {
    err << "warning: directed vertex-diameter bound is heuristic; pass "
           "--diameter-override for a certified run\n";
  }
  const RunReport report = run(g, cfg);

  std::string csv_path;
  if (!a.graph.out.empty()) {
    csv_path = sibling(a.graph.out, ".csv").string();
    auto f = open_out(csv_path);
    write_centrality_csv(f, g, report.estimates, "bc_estimate");
  }
  json doc = run_report_json(report, csv_path, !a.no_timing);
  doc["command"] = cmd;
  emit(doc, a.graph.out, out);
  if (!report.guaranteed) {
    err << "budget exhausted after " << report.m_final << " samples; no guarantee\n";
    return kTruncated;
  }
  return kOk;
}

// ---- topk -----------------------------------------------------------------

struct TopKArgs {
  GraphArgs graph;
  SamplingArgs sampling;
  std::size_t k = 10;
  double eta = 0.1;
  std::uint32_t kappa = 5;
  bool no_timing = false;
};

void add_topk_flags(CLI::App& app, TopKArgs& a) {
  add_graph_flags(app, a.graph);
  add_sampling_flags(app, a.sampling);
  app.add_option("-k", a.k, "Number of top nodes")->check(CLI::PositiveNumber);
  app.add_option("--eta", a.eta, "Relative accuracy")->check(CLI::Range(0.0, 1.0));
  app.add_option("--kappa", a.kappa, "First-phase hits per node")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", a.no_timing, "Omit wall-clock time from the report");
}

TopKConfig topk_config(const TopKArgs& a) {
  TopKConfig cfg;
  cfg.k = a.k;
  cfg.eta = a.eta;
  cfg.delta = a.sampling.delta;
  cfg.trials = a.sampling.trials;
  cfg.lambda = a.sampling.lambda;
  cfg.peeling_base = a.sampling.base;
  cfg.ratio = a.sampling.ratio;
  cfg.kappa = a.kappa;
  cfg.bag_cap = a.sampling.bag_cap;
  cfg.seed = a.graph.seed;
  cfg.threads = a.graph.threads;
  cfg.max_seconds = a.graph.max_seconds;
  return cfg;
}

int do_topk(const TopKArgs& a, std::ostream& out, std::ostream& err) {
  const TopKConfig cfg = topk_config(a);
  json cmd = command_json("topk", a.graph);
  err << "config " << json{{"command", cmd}, {"config", cfg}}.dump() << '\n';

  const Graph g = load_edge_list_file(a.graph.path, a.graph.directed);
  const TopKResult result = run_topk(g, cfg);
  json doc = topk_result_json(result, g, !a.no_timing);
  doc["command"] = cmd;
  emit(doc, a.graph.out, out);
  if (!result.guaranteed) {
    err << "stopped after " << result.m_final << " samples without acceptance; no guarantee\n";
    return kTruncated;
  }
  return kOk;
}

// ---- exact ----------------------------------------------------------------

int do_exact(const GraphArgs& a, std::ostream& out, std::ostream& err) {
  err << "config " << json{{"command", command_json("exact", a)}}.dump() << '\n';
  const Graph g = load_edge_list_file(a.path, a.directed);
  ExactOptions opt;
  opt.threads = a.threads;
  opt.deadline = deadline_from(a.max_seconds);
  const CentralityMap bc = brandes_exact(g, opt);
  if (a.out.empty()) {
    write_centrality_csv(out, g, bc, "bc");
  } else {
    auto f = open_out(a.out);
    write_centrality_csv(f, g, bc, "bc");
  }
  return kOk;
}

// ---- stats ----------------------------------------------------------------

struct StatsArgs {
  GraphArgs graph;
  double delta = 0.05;
  std::uint64_t samples = 10000;
  unsigned pivots = 4;
};

int do_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
  if (!(a.delta > 0.0 && a.delta < 1.0)) throw ParameterError("delta must lie in (0,1)");
  if (a.samples < 2) throw ParameterError("probe needs at least two samples");
  json cmd = command_json("stats", a.graph);
  cmd["delta"] = a.delta;
  cmd["samples"] = a.samples;
  cmd["pivots"] = a.pivots;
  err << "config " << json{{"command", cmd}}.dump() << '\n';

  const Graph g = load_edge_list_file(a.graph.path, a.graph.directed);
  const DiameterBound diam = vertex_diameter_upper_bound(g, a.pivots, a.graph.seed);
  json doc{{"command", cmd},
           {"nodes", g.num_nodes()},
           {"edges", g.num_edges()},
           {"directed", g.directed()},
           {"vertex_diameter_bound", diam.value},
           {"diameter_certified", diam.certified}};

  if (g.num_nodes() >= 2) {
    // Probe sample: one path per pair is enough for rho and max b~.
    SampleDriver driver(g, RunConfig{}.alpha(), kDefaultBagCap, a.graph.seed, a.graph.threads);
    EstimatorState probe(g.num_nodes(), 0);
    const std::uint64_t got =
        driver.fill(probe, Stream::kProbe, 0, a.samples, deadline_from(a.graph.max_seconds));
    doc["probe_samples"] = got;
    if (got >= 2) {
      const double d = diam.value;
      const double rho_tilde = std::min(probe.rho_tilde(), d);
      const double lambda = bounds::lambda_streaming(got, probe.x_sum(), probe.x_sq_sum());
      double rho = bounds::rho_bound_empirical_bernstein(rho_tilde, lambda, d, got, a.delta);
      if (diam.certified) rho = std::min(rho, d);
      double max_est = 0.0;
      for (double b : probe.estimates()) max_est = std::max(max_est, b);
      doc["rho_tilde"] = rho_tilde;
      doc["rho_bound"] = rho;
      doc["max_estimate"] = max_est;
    }
    if (got < a.samples) {
      emit(doc, a.graph.out, out);
      err << "probe truncated at " << got << " samples\n";
      return kTruncated;
    }
  }
  emit(doc, a.graph.out, out);
  return kOk;
}

// ---- bounds-eval ----------------------------------------------------------

struct BoundsArgs {
  std::string formula;
  std::optional<double> x, u, v, y, mcera, wimpy, log_term, nu, epsilon, delta, nu_hat, rho,
      rho_tilde, lambda_var, diameter, b, b_tilde;
  std::optional<std::uint64_t> m, n, t, iteration;
  std::optional<std::size_t> trials;
  std::string mode = "main";
};

void add_bounds_flags(CLI::App& app, BoundsArgs& a) {
  app.add_option("formula", a.formula,
                 "g | h | h1 | fixed-point | era | radius | eps | var | schedule-log | "
                 "sufficient-samples | closed-form | relative-deviation | invert-ci | "
                 "rho-bernstein | rho-empirical-bernstein")
      ->required();
  app.add_option("--x", a.x);
  app.add_option("--u", a.u);
  app.add_option("--v", a.v);
  app.add_option("--y", a.y);
  app.add_option("--mcera", a.mcera);
  app.add_option("--wimpy", a.wimpy);
  app.add_option("--log-term", a.log_term);
  app.add_option("--nu", a.nu);
  app.add_option("-e,--epsilon", a.epsilon);
  app.add_option("-d,--delta", a.delta);
  app.add_option("--nu-hat", a.nu_hat);
  app.add_option("--rho", a.rho);
  app.add_option("--rho-tilde", a.rho_tilde);
  app.add_option("--lambda-var", a.lambda_var);
  app.add_option("--diameter", a.diameter);
  app.add_option("--b", a.b);
  app.add_option("--b-tilde", a.b_tilde);
  app.add_option("-m", a.m);
  app.add_option("--n", a.n);
  app.add_option("--t", a.t);
  app.add_option("--i", a.iteration);
  app.add_option("-c,--trials", a.trials);
  app.add_option("--mode", a.mode)->check(CLI::IsMember({"main", "topk"}));
}

template <class T>
T need(const std::optional<T>& v, const char* name) {
  if (!v) throw ParameterError(std::string("missing --") + name);
  return *v;
}

int do_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  json params = json::object();
  auto p = [&](const char* name, auto value) {
    params[name] = value;
    return value;
  };
  json value;
  const std::string& f = a.formula;
  if (f == "g") {
    value = bounds::g(p("x", need(a.x, "x")));
  } else if (f == "h") {
    value = bounds::h(p("x", need(a.x, "x")));
  } else if (f == "h1") {
    value = bounds::h1(p("x", need(a.x, "x")));
  } else if (f == "fixed-point") {
    value = bounds::fixed_point(p("u", need(a.u, "u")), p("v", need(a.v, "v")),
                                p("y", need(a.y, "y")));
  } else if (f == "era") {
    value = bounds::era_upper_bound(p("mcera", need(a.mcera, "mcera")),
                                    p("wimpy", need(a.wimpy, "wimpy")),
                                    p("trials", need(a.trials, "trials")), p("m", need(a.m, "m")),
                                    p("log_term", need(a.log_term, "log-term")));
  } else if (f == "radius") {
    value = bounds::rademacher_radius(p("era", need(a.x, "x")), p("m", need(a.m, "m")),
                                      p("log_term", need(a.log_term, "log-term")));
  } else if (f == "eps") {
    value = bounds::eps_bound(p("era", need(a.x, "x")), p("nu", need(a.nu, "nu")),
                              p("m", need(a.m, "m")), p("log_term", need(a.log_term, "log-term")));
  } else if (f == "var") {
    value = bounds::var_upper_bound(p("wimpy", need(a.wimpy, "wimpy")), p("m", need(a.m, "m")),
                                    p("log_term", need(a.log_term, "log-term")));
  } else if (f == "schedule-log") {
    const auto i = need(a.iteration, "i");
    if (i < 1) throw ParameterError("--i must be >= 1");
    params["mode"] = a.mode;
    value = bounds::schedule_log_term(
        p("delta", need(a.delta, "delta")), p("t", need(a.t, "t")),
        static_cast<unsigned>(p("i", i)),
        a.mode == "topk" ? bounds::ScheduleMode::kTopK : bounds::ScheduleMode::kMain);
  } else if (f == "sufficient-samples") {
    const auto sb = bounds::sufficient_samples_detail(
        p("epsilon", need(a.epsilon, "epsilon")), p("delta", need(a.delta, "delta")),
        p("nu_hat", need(a.nu_hat, "nu-hat")), p("rho", need(a.rho, "rho")));
    value = {{"samples", sb.samples}, {"x_hat1", sb.x_hat1},   {"x_hat2", sb.x_hat2},
             {"x_hat", sb.x_hat},     {"argmax", sb.argmax},   {"supremum", sb.supremum}};
  } else if (f == "closed-form") {
    value = bounds::closed_form_samples(
        p("epsilon", need(a.epsilon, "epsilon")), p("delta", need(a.delta, "delta")),
        p("nu_hat", need(a.nu_hat, "nu-hat")), p("rho", need(a.rho, "rho")));
  } else if (f == "relative-deviation") {
    value = bounds::relative_deviation(
        p("b", need(a.b, "b")), p("m", need(a.m, "m")), p("delta", need(a.delta, "delta")),
        p("nu_hat", need(a.nu_hat, "nu-hat")), p("rho", need(a.rho, "rho")),
        p("n", need(a.n, "n")));
  } else if (f == "invert-ci") {
    const auto ci = bounds::invert_ci(
        p("b_tilde", need(a.b_tilde, "b-tilde")), p("m", need(a.m, "m")),
        p("delta", need(a.delta, "delta")), p("nu_hat", need(a.nu_hat, "nu-hat")),
        p("rho", need(a.rho, "rho")), p("n", need(a.n, "n")));
    value = {{"lower", ci.lower}, {"upper", ci.upper}};
  } else if (f == "rho-bernstein") {
    value = bounds::rho_bound_bernstein(
        p("rho_tilde", need(a.rho_tilde, "rho-tilde")), p("diameter", need(a.diameter, "diameter")),
        p("m", need(a.m, "m")), p("delta", need(a.delta, "delta")));
  } else if (f == "rho-empirical-bernstein") {
    value = bounds::rho_bound_empirical_bernstein(
        p("rho_tilde", need(a.rho_tilde, "rho-tilde")),
        p("lambda_var", need(a.lambda_var, "lambda-var")),
        p("diameter", need(a.diameter, "diameter")), p("m", need(a.m, "m")),
        p("delta", need(a.delta, "delta")));
  } else {
    throw ParameterError("unknown formula '" + f + "'");
  }
  err << "config " << json{{"command", {{"subcommand", "bounds-eval"}, {"formula", f}}},
                           {"params", params}}.dump()
      << '\n';
  out << json{{"formula", f}, {"params", params}, {"value", value}}.dump(2) << '\n';
  return kOk;
}

// ---- validate -------------------------------------------------------------

struct ValidateArgs {
  ApproxArgs approx;
  std::optional<std::size_t> k;
  double eta = 0.1;
  std::uint32_t kappa = 5;
  unsigned runs = 10;
};

int do_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const GraphArgs& ga = a.approx.graph;
  const bool topk_mode = a.k.has_value();
  RunConfig rc = run_config(a.approx);
  TopKConfig tc;
  json cmd = command_json("validate", ga);
  cmd["runs"] = a.runs;
  cmd["mode"] = topk_mode ? "topk" : "approx";
  if (topk_mode) {
    TopKArgs ta;
    ta.graph = ga;
    ta.sampling = a.approx.sampling;
    ta.k = *a.k;
    ta.eta = a.eta;
    ta.kappa = a.kappa;
    tc = topk_config(ta);
    tc.max_seconds.reset();
    err << "config " << json{{"command", cmd}, {"config", tc}}.dump() << '\n';
  } else {
    rc.max_seconds.reset();
    rc.validate();
    err << "config " << json{{"command", cmd}, {"config", rc}}.dump() << '\n';
  }

  const Graph g = load_edge_list_file(ga.path, ga.directed);
  if (g.num_nodes() > 100000) throw ParameterError("graph too large for the exact oracle");
  if (g.num_nodes() > 10000) err << "warning: exact oracle on " << g.num_nodes() << " nodes\n";

  const auto deadline = deadline_from(ga.max_seconds);
  auto remaining = [&]() -> std::optional<double> {
    if (!deadline) return std::nullopt;
    return std::max(1e-3, std::chrono::duration<double>(*deadline - Clock::now()).count());
  };
  ExactOptions opt;
  opt.threads = ga.threads;
  opt.deadline = deadline;
  const CentralityMap exact = brandes_exact(g, opt);

  json runs = json::array();
  unsigned failures = 0;
  bool truncated = false;
  for (unsigned r = 0; r < a.runs; ++r) {
    const std::uint64_t seed = ga.seed + r;
    json rec{{"seed", seed}};
    if (topk_mode) {
      tc.seed = seed;
      tc.max_seconds = remaining();
      const TopKResult res = run_topk(g, tc);
      const TopKCheck chk = check_topk(res, exact, tc.k, tc.eta);
      rec["contains_top_k"] = chk.contains_top_k;
      rec["relative_error"] = chk.relative_error;
      rec["extras_near"] = chk.extras_near;
      rec["entries"] = res.entries.size();
      rec["m_final"] = res.m_final;
      rec["guaranteed"] = res.guaranteed;
      rec["ok"] = chk.ok();
      truncated |= !res.guaranteed;
      failures += chk.ok() ? 0 : 1;
    } else {
      rc.seed = seed;
      rc.max_seconds = remaining();
      const RunReport rep = run(g, rc);
      const double sup = sup_deviation(rep.estimates, exact);
      rec["sup_deviation"] = sup;
      rec["m_final"] = rep.m_final;
      rec["stop_reason"] = to_string(rep.stop);
      rec["guaranteed"] = rep.guaranteed;
      rec["ok"] = sup <= rc.epsilon;
      truncated |= !rep.guaranteed;
      failures += sup <= rc.epsilon ? 0 : 1;
    }
    runs.push_back(rec);
  }
  const double delta = topk_mode ? tc.delta : rc.delta;
  const double rate = a.runs == 0 ? 0.0 : static_cast<double>(failures) / a.runs;
  json doc{{"command", cmd},
           {"config", topk_mode ? json(tc) : json(rc)},
           {"nodes", g.num_nodes()},
           {"runs", runs},
           {"failures", failures},
           {"failure_rate", rate},
           {"delta", delta},
           {"truncated", truncated}};
  emit(doc, ga.out, out);
  if (truncated) return kTruncated;
  return rate > delta ? kValidationFailed : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betweenness centrality approximation with probabilistic guarantees", "bcapprox"};
  app.require_subcommand(1);

  ApproxArgs approx;
  auto* approx_cmd = app.add_subcommand("approx", "Additive approximation of every node");
  add_approx_flags(*approx_cmd, approx);

  TopKArgs topk;
  auto* topk_cmd = app.add_subcommand("topk", "Relative approximation of the top-k nodes");
  add_topk_flags(*topk_cmd, topk);

  GraphArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact betweenness (CSV node,bc)");
  add_graph_flags(*exact_cmd, exact);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Graph statistics and probe estimates");
  add_graph_flags(*stats_cmd, stats.graph);
  stats_cmd->add_option("-d,--delta", stats.delta, "Confidence for the rho bound");
  stats_cmd->add_option("--samples", stats.samples, "Probe sample size");
  stats_cmd->add_option("--pivots", stats.pivots, "Diameter pivots");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds-eval", "Evaluate one bound formula");
  add_bounds_flags(*bounds_cmd, bounds_args);

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Seeded runs checked against the oracle");
  add_approx_flags(*validate_cmd, validate.approx);
  validate_cmd->add_option("-k", validate.k, "Validate top-k instead of approx")
      ->check(CLI::PositiveNumber);
  validate_cmd->add_option("--eta", validate.eta, "Relative accuracy (top-k)");
  validate_cmd->add_option("--kappa", validate.kappa, "First-phase hits per node (top-k)");
  validate_cmd->add_option("--runs", validate.runs, "Number of seeded runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*approx_cmd) return do_approx(approx, out, err);
    if (*topk_cmd) return do_topk(topk, out, err);
    if (*exact_cmd) return do_exact(exact, out, err);
    if (*stats_cmd) return do_stats(stats, out, err);
    if (*bounds_cmd) return do_bounds(bounds_args, out, err);
    if (*validate_cmd) return do_validate(validate, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << '\n';
    return kOracleTimeout;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace bcapprox::cli
