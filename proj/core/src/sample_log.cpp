#include "bcapprox/sample_log.hpp"

#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "bcapprox/error.hpp"

namespace bcapprox {

void write_sample_record(std::ostream& out, const PathBag& bag,
                         std::span<const std::int8_t> signs) {
  nlohmann::json paths = nlohmann::json::array();
  for (std::size_t i = 0; i < bag.bag_size; ++i) {
    auto p = bag.path(i);
    paths.push_back(std::vector<NodeId>(p.begin(), p.end()));
  }
  nlohmann::json rec = {
      {"s", bag.source},
      {"t", bag.target},
      {"paths", std::move(paths)},
      {"signs", std::vector<int>(signs.begin(), signs.end())},
  };
  out << rec.dump() << '\n';
}

std::vector<LoggedSample> read_sample_log(std::istream& in) {
  std::vector<LoggedSample> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto rec = nlohmann::json::parse(line);
      LoggedSample sample;
      sample.bag.source = rec.at("s").get<NodeId>();
      sample.bag.target = rec.at("t").get<NodeId>();
      const auto& paths = rec.at("paths");
      sample.bag.bag_size = paths.size();
      if (!paths.empty()) {
        sample.bag.path_length = static_cast<std::uint32_t>(paths.front().size());
      }
      for (const auto& p : paths) {
        if (p.size() != sample.bag.path_length) {
          throw ParseError(line_no, "paths in one bag must have equal length");
        }
        for (const auto& v : p) sample.bag.nodes.push_back(v.get<NodeId>());
      }
      for (const auto& s : rec.at("signs")) {
        const int sign = s.get<int>();
        if (sign != 1 && sign != -1) throw ParseError(line_no, "signs must be -1 or +1");
        sample.signs.push_back(static_cast<std::int8_t>(sign));
      }
      out.push_back(std::move(sample));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

EstimatorState replay(std::span<const LoggedSample> samples, std::size_t num_nodes,
                      std::size_t trials) {
  EstimatorState state(num_nodes, trials);
  for (const auto& s : samples) state.ingest(s.bag, s.signs);
  return state;
}

}  // namespace bcapprox
