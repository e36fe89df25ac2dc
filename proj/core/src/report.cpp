#include "bcapprox/report.hpp"

#include <cstdio>
#include <ostream>

namespace bcapprox {

using nlohmann::json;

namespace {

template <class T>
void read_optional(const json& j, const char* key, std::optional<T>& out) {
  if (auto it = j.find(key); it != j.end() && !it->is_null()) {
    out = it->get<T>();
  } else {
    out.reset();
  }
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
json optional_json(const std::optional<std::uint32_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json class_json(const ClassRecord& c) {
  return {{"class", c.index}, {"size", c.size},  {"mcera", c.mcera},
          {"wimpy", c.wimpy}, {"nu", c.nu},      {"eps", c.eps}};
}

}  // namespace

void to_json(json& j, const RunConfig& cfg) {
  j = json{{"epsilon", cfg.epsilon},
           {"delta", cfg.delta},
           {"trials", cfg.trials},
           {"lambda", cfg.lambda},
           {"peeling_base", cfg.peeling_base},
           {"ratio", cfg.ratio},
           {"bag_cap", cfg.bag_cap},
           {"seed", cfg.seed},
           {"threads", cfg.threads},
           {"diameter_pivots", cfg.diameter_pivots},
           {"diameter_override", optional_json(cfg.diameter_override)},
           {"max_seconds", optional_json(cfg.max_seconds)}};
}

void from_json(const json& j, RunConfig& cfg) {
  j.at("epsilon").get_to(cfg.epsilon);
  j.at("delta").get_to(cfg.delta);
  j.at("trials").get_to(cfg.trials);
  j.at("lambda").get_to(cfg.lambda);
  j.at("peeling_base").get_to(cfg.peeling_base);
  j.at("ratio").get_to(cfg.ratio);
  j.at("bag_cap").get_to(cfg.bag_cap);
  j.at("seed").get_to(cfg.seed);
  j.at("threads").get_to(cfg.threads);
  j.at("diameter_pivots").get_to(cfg.diameter_pivots);
  read_optional(j, "diameter_override", cfg.diameter_override);
  read_optional(j, "max_seconds", cfg.max_seconds);
}

void to_json(json& j, const TopKConfig& cfg) {
  j = json{{"k", cfg.k},
           {"eta", cfg.eta},
           {"delta", cfg.delta},
           {"trials", cfg.trials},
           {"lambda", cfg.lambda},
           {"peeling_base", cfg.peeling_base},
           {"ratio", cfg.ratio},
           {"kappa", cfg.kappa},
           {"first_phase_cap", cfg.first_phase_cap},
           {"bag_cap", cfg.bag_cap},
           {"seed", cfg.seed},
           {"threads", cfg.threads},
           {"max_seconds", optional_json(cfg.max_seconds)},
           {"max_samples", cfg.max_samples}};
}

void from_json(const json& j, TopKConfig& cfg) {
  j.at("k").get_to(cfg.k);
  j.at("eta").get_to(cfg.eta);
  j.at("delta").get_to(cfg.delta);
  j.at("trials").get_to(cfg.trials);
  j.at("lambda").get_to(cfg.lambda);
  j.at("peeling_base").get_to(cfg.peeling_base);
  j.at("ratio").get_to(cfg.ratio);
  j.at("kappa").get_to(cfg.kappa);
  j.at("first_phase_cap").get_to(cfg.first_phase_cap);
  j.at("bag_cap").get_to(cfg.bag_cap);
  j.at("seed").get_to(cfg.seed);
  j.at("threads").get_to(cfg.threads);
  read_optional(j, "max_seconds", cfg.max_seconds);
  j.at("max_samples").get_to(cfg.max_samples);
}

json run_report_json(const RunReport& r, const std::string& estimates_path, bool with_timing) {
  json iterations = json::array();
  for (const auto& it : r.iterations) {
    json per_class = json::array();
    for (const auto& c : it.classes) per_class.push_back(class_json(c));
    iterations.push_back(
        {{"i", it.index}, {"m_i", it.samples}, {"log_term", it.log_term}, {"per_class", per_class}});
  }
  json final_classes = json::array();
  if (!r.iterations.empty()) {
    for (const auto& c : r.iterations.back().classes) final_classes.push_back(class_json(c));
  }
  const auto& sb = r.sample_bound;
  json out{
      {"config", r.config},
      {"graph_stats",
       {{"nodes", r.nodes},
        {"edges", r.edges},
        {"directed", r.directed},
        {"vertex_diameter_bound", r.diameter.value},
        {"diameter_certified", r.diameter.certified}}},
      {"m_prime", r.m_prime},
      {"rho_tilde", r.rho_tilde},
      {"lambda_var", r.lambda_var},
      {"rho", r.rho},
      {"nu_hat", r.nu_hat},
      {"sample_bound",
       {{"x_hat1", sb.x_hat1},
        {"x_hat2", sb.x_hat2},
        {"x_hat", sb.x_hat},
        {"argmax", sb.argmax},
        {"supremum", sb.supremum}}},
      {"m_hat", r.m_hat},
      {"classes", r.classes},
      {"m_first", r.m_first},
      {"m_final", r.m_final},
      {"iterations", iterations},
      {"final_classes", final_classes},
      {"estimates_path", estimates_path},
      {"stop_reason", to_string(r.stop)},
      {"guaranteed", r.guaranteed},
  };
  if (with_timing) out["wall_time_s"] = r.wall_time_s;
  return out;
}

json topk_result_json(const TopKResult& r, const Graph& g, bool with_timing) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"node", g.label(e.node)},
                       {"estimate", e.estimate},
                       {"lower", e.lower},
                       {"upper", e.upper}});
  }
  json iterations = json::array();
  for (const auto& it : r.iterations) {
    iterations.push_back({{"i", it.index},
                          {"m_i", it.samples},
                          {"log_term", it.log_term},
                          {"threshold", it.threshold},
                          {"candidates", it.candidates},
                          {"failing", it.failing},
                          {"max_eps", it.max_eps}});
  }
  json out{{"config", r.config},
           {"k", r.config.k},
           {"eta", r.config.eta},
           {"delta", r.config.delta},
           {"threshold", r.threshold},
           {"entries", entries},
           {"m_prime", r.m_prime},
           {"first_phase_capped", r.first_phase_capped},
           {"classes", r.classes},
           {"m_final", r.m_final},
           {"iterations", iterations},
           {"guaranteed", r.guaranteed}};
  if (with_timing) out["wall_time_s"] = r.wall_time_s;
  return out;
}

std::string format_g12(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_centrality_csv(std::ostream& out, const Graph& g, std::span<const double> values,
                          const std::string& column) {
  out << "node," << column << '\n';
  for (NodeId v : g.nodes_by_label()) out << g.label(v) << ',' << format_g12(values[v]) << '\n';
}

}  // namespace bcapprox
