#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "bcapprox/engine.hpp"
#include "bcapprox/graph.hpp"
#include "bcapprox/topk.hpp"

// JSON and CSV serialization of configs and results. Node ids in reports are
// external labels. Floating-point values keep full precision in JSON so
// configs round-trip exactly; CSV uses 12 significant digits.
namespace bcapprox {

void to_json(nlohmann::json& j, const RunConfig& cfg);
void from_json(const nlohmann::json& j, RunConfig& cfg);
void to_json(nlohmann::json& j, const TopKConfig& cfg);
void from_json(const nlohmann::json& j, TopKConfig& cfg);

// {config, graph_stats, m_prime, m_hat, iterations, estimates_path,
//  stop_reason, wall_time_s, ...}. wall_time_s is omitted when
// `with_timing` is false, which makes the report a pure function of the
// graph and config.
nlohmann::json run_report_json(const RunReport& report, const std::string& estimates_path,
                               bool with_timing = true);

// {k, eta, delta, threshold, entries, m_final, iterations, wall_time_s, ...}
nlohmann::json topk_result_json(const TopKResult& result, const Graph& g,
                                bool with_timing = true);

// "node,<column>" rows in external-label order, 12 significant digits.
void write_centrality_csv(std::ostream& out, const Graph& g, std::span<const double> values,
                          const std::string& column);

// Formats like printf("%.12g").
std::string format_g12(double value);

}  // namespace bcapprox
