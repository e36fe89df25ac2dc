// Acceptance suite: one PASS/FAIL line per criterion, each checked against
// an independent oracle. Exits 0 once every criterion has run; --strict turns
// any FAIL into exit status 1. --grqc runs the ca-GrQc criteria instead and
// exits 77 when the edge list cannot be found.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bcapprox/bounds.hpp"
#include "bcapprox/diameter.hpp"
#include "bcapprox/engine.hpp"
#include "bcapprox/estimator.hpp"
#include "bcapprox/exact.hpp"
#include "bcapprox/generators.hpp"
#include "bcapprox/path_sampler.hpp"
#include "bcapprox/sampling.hpp"
#include "bcapprox/topk.hpp"
#include "bcapprox/validation.hpp"
#include "cli.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace bcapprox;

namespace {

enum class Verdict { kPass, kFail, kWarn, kNotRun };

struct Outcome {
  Verdict verdict = Verdict::kFail;
  std::string summary;
};

const char* label(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kWarn:
      return "WARN";
    case Verdict::kNotRun:
      return "NOT RUN";
  }
  return "?";
}

std::string fmt(double x, int digits = 4) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

std::vector<NamedGraph> guarantee_graphs() {
  std::vector<NamedGraph> out;
  out.push_back({"ba-2000-3", gen::barabasi_albert(2000, 3, 11)});
  out.push_back({"er-3000", gen::erdos_renyi(3000, 0.002, 12)});
  out.push_back({"ba-5000-2", gen::barabasi_albert(5000, 2, 13)});
  out.push_back({"er-1000", gen::erdos_renyi(1000, 0.006, 14)});
  return out;
}

std::vector<NamedGraph> topk_graphs() {
  std::vector<NamedGraph> out;
  out.push_back({"ba-1000-1", gen::barabasi_albert(1000, 1, 21)});
  out.push_back({"ba-1500-2", gen::barabasi_albert(1500, 2, 22)});
  out.push_back({"ba-3000-1", gen::barabasi_albert(3000, 1, 23)});
  return out;
}

// ---- criteria 1 and 2 -------------------------------------------------------

struct GuaranteeRuns {
  std::size_t runs = 0;
  std::size_t within = 0;
  std::map<double, std::vector<double>> deviations;  // by epsilon
  std::vector<std::string> lines;
};

GuaranteeRuns guarantee_runs(const std::vector<NamedGraph>& graphs) {
  GuaranteeRuns out;
  for (const auto& [name, g] : graphs) {
    const CentralityMap exact = brandes_exact(g);
    for (double eps : {0.01, 0.005}) {
      std::size_t ok = 0;
      double worst = 0.0;
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RunConfig cfg;
        cfg.epsilon = eps;
        cfg.delta = 0.05;
        cfg.seed = seed;
        cfg.threads = 1;
        const RunReport r = run(g, cfg);
        const double sup = sup_deviation(r.estimates, exact);
        out.deviations[eps].push_back(sup);
        worst = std::max(worst, sup);
        ++out.runs;
        if (r.guaranteed && sup <= eps) {
          ++out.within;
          ++ok;
        }
      }
      out.lines.push_back(name + " eps=" + fmt(eps) + ": " + std::to_string(ok) +
                          "/10 within eps, worst sup deviation " + fmt(worst));
    }
  }
  return out;
}

Outcome criterion_guarantee(const GuaranteeRuns& runs) {
  for (const auto& l : runs.lines) std::cout << "    " << l << '\n';
  const double rate = static_cast<double>(runs.within) / static_cast<double>(runs.runs);
  return {rate >= 0.95 ? Verdict::kPass : Verdict::kFail,
          std::to_string(runs.within) + "/" + std::to_string(runs.runs) +
              " runs with sup deviation <= eps (need >= 95%)"};
}

Outcome criterion_sharpness(const GuaranteeRuns& runs) {
  bool ok = true;
  std::string summary;
  for (const auto& [eps, devs] : runs.deviations) {
    const double med = median(devs);
    ok &= med >= eps / 10.0;
    summary += "eps=" + fmt(eps) + " median " + fmt(med) + " (eps/10 = " + fmt(eps / 10) + ") ";
  }
  return {ok ? Verdict::kPass : Verdict::kWarn, summary};
}

// ---- criterion 3 --------------------------------------------------------------

Outcome criterion_topk() {
  std::size_t runs = 0;
  std::size_t ok = 0;
  for (const auto& [name, g] : topk_graphs()) {
    const CentralityMap exact = brandes_exact(g);
    for (std::size_t k : {5, 10}) {
      for (double eta : {0.1, 0.25}) {
        std::size_t good = 0;
        std::uint64_t max_m = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
          TopKConfig cfg;
          cfg.k = k;
          cfg.eta = eta;
          cfg.delta = 0.05;
          cfg.seed = seed;
          cfg.threads = 1;
          const TopKResult r = run_topk(g, cfg);
          const TopKCheck chk = check_topk(r, exact, k, eta);
          max_m = std::max(max_m, r.m_final);
          ++runs;
          if (r.guaranteed && chk.ok()) {
            ++good;
            ++ok;
          }
        }
        std::cout << "    " << name << " k=" << k << " eta=" << eta << ": " << good
                  << "/10 satisfy all three conditions, max samples " << max_m << '\n';
      }
    }
  }
  const double rate = static_cast<double>(ok) / static_cast<double>(runs);
  return {rate >= 0.95 ? Verdict::kPass : Verdict::kFail,
          std::to_string(ok) + "/" + std::to_string(runs) + " runs correct (need >= 95%)"};
}

// ---- criterion 4 --------------------------------------------------------------

Outcome criterion_sample_bound() {
  std::mt19937_64 rng(20240601);
  auto log_uniform = [&](double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
  };
  std::size_t inside = 0;
  double lo_ratio = INFINITY;
  double hi_ratio = 0.0;
  std::vector<std::string> misses;
  for (int i = 0; i < 50; ++i) {
    const double eps = log_uniform(1e-3, 1e-1);
    const double delta = log_uniform(1e-3, 0.25);
    const double nu = log_uniform(1e-4, 0.25);
    const double rho = log_uniform(0.25, 20.0);
    const double numeric = static_cast<double>(bounds::sufficient_samples(eps, delta, nu, rho));
    const double closed =
        (2.0 * nu + 2.0 * eps / 3.0) / (eps * eps) * (std::log(2.0 * rho / nu) + std::log(1.0 / delta));
    const double ratio = numeric / closed;
    lo_ratio = std::min(lo_ratio, ratio);
    hi_ratio = std::max(hi_ratio, ratio);
    if (ratio >= 0.7 && ratio <= 1.3) {
      ++inside;
    } else if (misses.size() < 8) {
      misses.push_back("eps=" + fmt(eps, 3) + " delta=" + fmt(delta, 3) + " nu=" + fmt(nu, 3) +
                       " rho=" + fmt(rho, 3) + " ratio=" + fmt(ratio, 3));
    }
  }
  for (const auto& m : misses) std::cout << "    outside: " << m << '\n';
  return {inside == 50 ? Verdict::kPass : Verdict::kFail,
          std::to_string(inside) + "/50 tuples with numeric/closed-form in [0.7, 1.3]; range [" +
              fmt(lo_ratio, 3) + ", " + fmt(hi_ratio, 3) + "]"};
}

// ---- criterion 5 --------------------------------------------------------------

Outcome criterion_rho() {
  std::vector<NamedGraph> graphs;
  graphs.push_back({"ba-200-2", gen::barabasi_albert(200, 2, 31)});
  graphs.push_back({"er-150", gen::erdos_renyi(150, 0.04, 32)});
  graphs.push_back({"grid-7x7", gen::grid(7, 7)});
  graphs.push_back({"cycle-40", gen::cycle(40)});
  graphs.push_back({"star-60", gen::star(60)});

  const double delta = 0.05;
  const std::uint64_t m_prime = first_phase_size(0.01, delta);
  std::size_t draws = 0;
  std::size_t bern_ok = 0;
  std::size_t emp_ok = 0;
  bool diameter_ok = true;
  for (const auto& [name, g] : graphs) {
    const auto brute = oracle::brute_betweenness(g);
    const double rho = std::accumulate(brute.begin(), brute.end(), 0.0);
    const double exact_d = oracle::vertex_diameter(g);
    const DiameterBound db = vertex_diameter_upper_bound(g, 4, 0);
    diameter_ok &= rho <= exact_d && exact_d <= db.value;
    std::size_t b_here = 0;
    std::size_t e_here = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      SampleDriver driver(g, std::log(10.0), kDefaultBagCap, seed, 1);
      EstimatorState first(g.num_nodes(), 0);
      driver.fill(first, Stream::kPeeling, 0, m_prime);
      const double rho_tilde = first.rho_tilde();
      const double lambda = bounds::lambda_streaming(m_prime, first.x_sum(), first.x_sq_sum());
      const double d = db.value;
      const double bern = bounds::rho_bound_bernstein(rho_tilde, d, m_prime, delta);
      const double emp = bounds::rho_bound_empirical_bernstein(rho_tilde, lambda, d, m_prime, delta);
      ++draws;
      if (bern >= rho) ++b_here;
      if (emp >= rho) ++e_here;
    }
    bern_ok += b_here;
    emp_ok += e_here;
    std::cout << "    " << name << ": sum b = " << fmt(rho) << ", D = " << exact_d
              << ", D_ub = " << db.value << ", Bernstein " << b_here << "/20, empirical Bernstein "
              << e_here << "/20\n";
  }
  const bool ok = bern_ok >= 0.95 * draws && emp_ok >= 0.95 * draws && diameter_ok;
  return {ok ? Verdict::kPass : Verdict::kFail,
          "Bernstein " + std::to_string(bern_ok) + "/" + std::to_string(draws) +
              ", empirical Bernstein " + std::to_string(emp_ok) + "/" + std::to_string(draws) +
              ", sum b <= D " + (diameter_ok ? "holds" : "violated")};
}

// ---- criterion 6 --------------------------------------------------------------

struct PathCase {
  std::string name;
  Graph graph;
  NodeId s;
  NodeId t;
};

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

// s = 0, t = 1, and `r` parallel middle nodes.
PathCase bundle(std::size_t r) {
  EdgeList e;
  for (NodeId i = 0; i < r; ++i) {
    e.push_back({0, 2 + i});
    e.push_back({2 + i, 1});
  }
  return {"bundle-" + std::to_string(r), Graph::from_edges(r + 2, e, false), 0, 1};
}

// `k` diamonds in series: sigma = 2^k.
PathCase diamond_chain(std::size_t k) {
  EdgeList e;
  NodeId next = 1;
  NodeId cur = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const NodeId a = next++, b = next++, end = next++;
    e.push_back({cur, a});
    e.push_back({cur, b});
    e.push_back({a, end});
    e.push_back({b, end});
    cur = end;
  }
  return {"diamonds-" + std::to_string(k), Graph::from_edges(next, e, false), 0, cur};
}

PathCase grid_corner(std::size_t rows, std::size_t cols) {
  return {"grid-" + std::to_string(rows) + "x" + std::to_string(cols), gen::grid(rows, cols), 0,
          static_cast<NodeId>(rows * cols - 1)};
}

// Complete bipartite layers between s and t with the given widths.
PathCase layered(const std::vector<std::size_t>& widths) {
  EdgeList e;
  std::vector<NodeId> prev{0};
  NodeId next = 1;
  std::string name = "layers";
  for (std::size_t w : widths) {
    std::vector<NodeId> layer;
    for (std::size_t i = 0; i < w; ++i) layer.push_back(next++);
    for (NodeId a : prev) {
      for (NodeId b : layer) e.push_back({a, b});
    }
    prev = layer;
    name += "-" + std::to_string(w);
  }
  const NodeId t = next++;
  for (NodeId a : prev) e.push_back({a, t});
  return {name, Graph::from_edges(next, e, false), 0, t};
}

PathCase hypercube(unsigned dim) {
  EdgeList e;
  const NodeId n = NodeId{1} << dim;
  for (NodeId v = 0; v < n; ++v) {
    for (unsigned b = 0; b < dim; ++b) {
      const NodeId u = v ^ (NodeId{1} << b);
      if (v < u) e.push_back({v, u});
    }
  }
  return {"hypercube-" + std::to_string(dim), Graph::from_edges(n, e, false), 0, n - 1};
}

// Unbalanced branching: a uniform walk over neighbours would not be uniform
// over paths here.
PathCase lopsided() {
  // s=0 -> a=1 -> {3,4,5} -> t=7; s -> b=2 -> 3; b -> 6 -> t.
  EdgeList e{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {3, 7}, {4, 7}, {5, 7}, {6, 7}};
  return {"lopsided", Graph::from_edges(8, e, false), 0, 7};
}

PathCase directed_lattice() {
  // Directed 3x4 lattice, edges right and down only.
  EdgeList e;
  const NodeId rows = 3, cols = 4;
  for (NodeId r = 0; r < rows; ++r) {
    for (NodeId c = 0; c < cols; ++c) {
      const NodeId v = r * cols + c;
      if (c + 1 < cols) e.push_back({v, v + 1});
      if (r + 1 < rows) e.push_back({v, v + cols});
    }
  }
  return {"directed-lattice-3x4", Graph::from_edges(rows * cols, e, true), 0, rows * cols - 1};
}

std::vector<PathCase> path_cases() {
  std::vector<PathCase> out;
  for (std::size_t k : {1, 2, 3, 4, 5}) out.push_back(diamond_chain(k));
  for (std::size_t r : {3, 7, 13}) out.push_back(bundle(r));
  out.push_back(grid_corner(2, 3));
  out.push_back(grid_corner(3, 3));
  out.push_back(grid_corner(3, 4));
  out.push_back(grid_corner(4, 4));
  out.push_back(grid_corner(4, 5));
  out.push_back(layered({2, 3}));
  out.push_back(layered({3, 3, 2}));
  out.push_back(layered({2, 2, 2, 2, 2}));
  out.push_back(hypercube(3));
  out.push_back(hypercube(4));
  out.push_back(lopsided());
  out.push_back(directed_lattice());
  return out;
}

std::vector<NodeId> internal(const oracle::Path& p) {
  return {p.begin() + 1, p.end() - 1};
}

Outcome criterion_uniformity() {
  constexpr std::size_t kDraws = 100000;
  const auto cases = path_cases();
  std::size_t passed = 0;
  double worst_p = 1.0;
  for (const auto& c : cases) {
    const auto paths = oracle::all_shortest_paths(c.graph, c.s, c.t);
    std::map<std::vector<NodeId>, std::size_t> index;
    for (const auto& p : paths) index.emplace(internal(p), index.size());
    PathSampler sampler(c.graph);
    const SpDag& dag = sampler.bidirectional_bfs(c.s, c.t);
    bool ok = dag.sigma_st == static_cast<double>(paths.size());
    std::vector<double> observed(paths.size(), 0.0);
    PathBag bag;
    for (std::size_t i = 0; i < kDraws && ok; ++i) {
      Rng rng = substream(77, Stream::kProbe, i);
      sampler.sample_bag(dag, std::log(10.0), 1, rng, bag);
      const auto it = index.find({bag.nodes.begin(), bag.nodes.end()});
      if (bag.bag_size != 1 || it == index.end()) {
        ok = false;
        break;
      }
      observed[it->second] += 1.0;
    }
    double p = 0.0;
    if (ok) {
      const std::vector<double> expected(paths.size(), static_cast<double>(kDraws) / paths.size());
      p = oracle::chi_square_p(observed, expected);
      ok = p > 0.001;
    }
    worst_p = std::min(worst_p, p);
    passed += ok ? 1 : 0;
    std::cout << "    " << c.name << ": sigma " << paths.size() << ", p = " << fmt(p) << '\n';
  }

  // Coverage: fraction of the sigma distinct paths missing from one bag.
  const double alpha = std::log(10.0);
  const double target = std::exp(-alpha);
  constexpr std::size_t kBags = 20000;
  std::size_t coverage_ok = 0;
  std::size_t coverage_total = 0;
  std::vector<std::size_t> failing_sigma;
  for (std::size_t sigma : {2, 3, 5, 8, 11, 12, 16, 20, 24, 32, 35, 40, 50}) {
    PathCase c = sigma == 35 ? grid_corner(4, 5) : bundle(sigma);
    PathSampler sampler(c.graph);
    const SpDag& dag = sampler.bidirectional_bfs(c.s, c.t);
    PathBag bag;
    double missing = 0.0;
    for (std::size_t i = 0; i < kBags; ++i) {
      Rng rng = substream(91, Stream::kProbe, sigma * kBags + i);
      sampler.sample_bag(dag, alpha, kDefaultBagCap, rng, bag);
      std::set<std::vector<NodeId>> distinct;
      for (std::size_t j = 0; j < bag.bag_size; ++j) {
        const auto p = bag.path(j);
        distinct.emplace(p.begin(), p.end());
      }
      missing += 1.0 - static_cast<double>(distinct.size()) / static_cast<double>(sigma);
    }
    missing /= static_cast<double>(kBags);
    const double finite =
        std::pow(1.0 - 1.0 / static_cast<double>(sigma), std::ceil(alpha * static_cast<double>(sigma)));
    const double rel = missing / target - 1.0;
    const bool ok = std::abs(rel) <= 0.2;
    ++coverage_total;
    if (ok) {
      ++coverage_ok;
    } else {
      failing_sigma.push_back(sigma);
    }
    std::cout << "    coverage sigma " << sigma << ": missing " << fmt(missing)
              << " vs e^-alpha " << fmt(target) << " (" << (rel >= 0 ? "+" : "") << fmt(100 * rel, 3)
              << "%), finite-sigma value " << fmt(finite) << '\n';
  }
  std::string failing;
  for (std::size_t s : failing_sigma) failing += " " + std::to_string(s);
  const bool ok = passed == cases.size() && coverage_ok == coverage_total;
  return {ok ? Verdict::kPass : Verdict::kFail,
          "chi-square " + std::to_string(passed) + "/" + std::to_string(cases.size()) +
              " graphs with p > 0.001 (min p " + fmt(worst_p) + "); coverage within 20% of e^-alpha for " +
              std::to_string(coverage_ok) + "/" + std::to_string(coverage_total) + " sigma values" +
              (failing.empty() ? std::string() : ", off at sigma" + failing)};
}

// ---- criterion 7 --------------------------------------------------------------

Outcome criterion_lambda() {
  std::mt19937_64 rng(4242);
  double worst = 0.0;
  std::size_t ok = 0;
  for (int i = 0; i < 100; ++i) {
    std::size_t m = i % 10 == 0 ? 10000 : 2 + rng() % 9999;
    std::vector<double> x(m);
    if (i % 2 == 0) {
      // Internal path lengths are integers bounded by the diameter.
      std::uniform_int_distribution<int> len(0, 30);
      for (double& v : x) v = len(rng);
    } else {
      std::uniform_real_distribution<double> u(0.0, 50.0);
      for (double& v : x) v = u(rng);
    }
    double sum = 0.0;
    double sq = 0.0;
    for (double v : x) {
      sum += v;
      sq += v * v;
    }
    const double streaming = bounds::lambda_streaming(m, sum, sq);
    const double pairwise = oracle::pairwise_lambda(x);
    const double rel = std::abs(streaming - pairwise) / std::max(std::abs(pairwise), 1e-300);
    worst = std::max(worst, rel);
    if (rel <= 1e-9) ++ok;
  }
  return {ok == 100 ? Verdict::kPass : Verdict::kFail,
          std::to_string(ok) + "/100 vectors within 1e-9 relative (worst " + fmt(worst, 3) + ")"};
}

// ---- criterion 9 --------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int call_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "bcapprox");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  return code;
}

Outcome criterion_determinism(const fs::path& dir) {
  std::size_t identical = 0;
  std::size_t total = 0;
  auto check = [&](const std::string& name, std::vector<std::string> args, bool csv) {
    const fs::path out = dir / (name + ".json");
    args.insert(args.end(), {"--seed", "5", "--threads", "1", "--no-timing", "--out", out.string()});
    std::string first_json, first_csv;
    bool same = true;
    for (int rep = 0; rep < 2; ++rep) {
      const int code = call_cli(args);
      const std::string json = slurp(out);
      const std::string table = csv ? slurp(fs::path(out).replace_extension(".csv")) : "";
      if (code != cli::kOk || json.empty()) same = false;
      if (rep == 0) {
        first_json = json;
        first_csv = table;
      } else {
        same &= json == first_json && table == first_csv;
      }
    }
    ++total;
    identical += same ? 1 : 0;
    std::cout << "    " << name << ": " << (same ? "identical" : "DIFFERENT") << '\n';
  };
  for (const auto& [name, g] : guarantee_graphs()) {
    const fs::path file = dir / (name + ".txt");
    {
      std::ofstream f(file);
      write_edge_list(f, g);
    }
    check("approx-" + name, {"approx", "-g", file.string(), "-e", "0.01"}, true);
  }
  for (const auto& [name, g] : topk_graphs()) {
    const fs::path file = dir / (name + ".txt");
    {
      std::ofstream f(file);
      write_edge_list(f, g);
    }
    check("topk-" + name, {"topk", "-g", file.string(), "-k", "5", "--eta", "0.25"}, false);
  }
  return {identical == total ? Verdict::kPass : Verdict::kFail,
          std::to_string(identical) + "/" + std::to_string(total) +
              " reports byte-identical across two runs"};
}

// ---- ca-GrQc ------------------------------------------------------------------

double round_sig(double x, int digits) {
  if (x == 0.0) return 0.0;
  const double scale = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(x))));
  return std::round(x * scale) / scale;
}

Outcome criterion_ingestion(const fs::path& file, const Graph& g) {
  std::string out;
  const int code = call_cli({"stats", "-g", file.string(), "--samples", "2000"}, &out);
  std::uint32_t d_ub = 0;
  if (code == cli::kOk) d_ub = nlohmann::json::parse(out)["vertex_diameter_bound"].get<std::uint32_t>();
  const bool sizes = round_sig(static_cast<double>(g.num_nodes()), 3) == 5240.0 &&
                     round_sig(static_cast<double>(g.num_edges()), 3) == 14400.0;
  return {sizes && d_ub >= 17 ? Verdict::kPass : Verdict::kFail,
          "|V| = " + std::to_string(g.num_nodes()) + ", |E| = " + std::to_string(g.num_edges()) +
              ", stats D_ub = " + std::to_string(d_ub)};
}

struct Runner {
  bool strict = false;
  std::size_t failures = 0;
  std::set<int> only;

  void operator()(int id, const std::string& name, const std::function<Outcome()>& body) {
    if (!only.empty() && !only.count(id)) return;
    std::cout << "criterion " << id << " (" << name << ")\n" << std::flush;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = body();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.verdict == Verdict::kFail) ++failures;
    std::cout << label(o.verdict) << " criterion " << id << " " << name << ": " << o.summary
              << " [" << fmt(secs, 3) << " s]\n"
              << std::flush;
  }
};

fs::path grqc_path() {
  if (const char* env = std::getenv("BCAPPROX_GRQC")) return env;
  return fs::path(BCAPPROX_SOURCE_DIR) / "data" / "ca-GrQc.txt";
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::unitbuf;
  Runner run_one;
  bool grqc = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--strict") {
      run_one.strict = true;
    } else if (a == "--grqc") {
      grqc = true;
    } else if (a == "--only" && i + 1 < argc) {
      run_one.only.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--grqc] [--strict] [--only N]...\n";
      return 2;
    }
  }

  try {
    if (grqc) {
      const fs::path file = grqc_path();
      if (!fs::exists(file)) {
        std::cout << "NOT RUN criterion 8 ingestion: " << file.string()
                  << " not found (set BCAPPROX_GRQC)\n";
        return 77;
      }
      const Graph g = load_edge_list_file(file, false);
      run_one(8, "ingestion", [&] { return criterion_ingestion(file, g); });
      run_one(1, "guarantee soundness on ca-GrQc", [&] {
        std::vector<NamedGraph> graphs;
        graphs.push_back({"ca-GrQc", g});
        return criterion_guarantee(guarantee_runs(graphs));
      });
    } else {
      const fs::path dir = fs::temp_directory_path() / "bcapprox_acceptance";
      fs::create_directories(dir);
      GuaranteeRuns runs;
      bool have_runs = false;
      auto ensure_runs = [&] {
        if (!have_runs) runs = guarantee_runs(guarantee_graphs());
        have_runs = true;
      };
      run_one(1, "guarantee soundness", [&] {
        ensure_runs();
        return criterion_guarantee(runs);
      });
      run_one(2, "sharpness", [&] {
        ensure_runs();
        return criterion_sharpness(runs);
      });
      run_one(3, "top-k correctness", criterion_topk);
      run_one(4, "sample-size bound vs closed form", criterion_sample_bound);
      run_one(5, "rho bounds", criterion_rho);
      run_one(6, "uniform path sampling", criterion_uniformity);
      run_one(7, "streaming Lambda", criterion_lambda);
      run_one(8, "ingestion", [] {
        return Outcome{Verdict::kNotRun, "needs ca-GrQc; run `acceptance --grqc`"};
      });
      run_one(9, "determinism", [&] { return criterion_determinism(dir); });
      fs::remove_all(dir);
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << '\n';
    return 1;
  }
  std::cout << run_one.failures << " criteria failed\n";
  return run_one.strict && run_one.failures > 0 ? 1 : 0;
}
