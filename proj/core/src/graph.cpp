#include "bcapprox/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "bcapprox/error.hpp"

namespace bcapprox {
namespace {

// CSR from (src,dst) pairs; each row sorted and deduplicated.
void build_csr(std::size_t n, std::vector<std::pair<NodeId, NodeId>>& arcs,
               std::vector<std::size_t>& offsets, std::vector<NodeId>& adj) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  offsets.assign(n + 1, 0);
  for (const auto& [u, v] : arcs) ++offsets[u + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  adj.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) adj[i] = arcs[i].second;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

std::string_view next_token(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && is_space(rest[b])) ++b;
  std::size_t e = b;
  while (e < rest.size() && !is_space(rest[e])) ++e;
  std::string_view tok = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return tok;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, "expected a nonnegative integer node id, got '" +
                                  std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<NodeId, NodeId>> edges,
                        bool directed, std::vector<std::uint64_t> labels) {
  Graph g;
  g.directed_ = directed;
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), std::uint64_t{0});
  }
  if (labels.size() != n) throw ParameterError("label count differs from node count");
  g.labels_ = std::move(labels);

  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw ParameterError("edge endpoint out of range");
    if (u == v) continue;
    arcs.emplace_back(u, v);
    if (!directed) arcs.emplace_back(v, u);
  }

  if (directed) {
    std::vector<std::pair<NodeId, NodeId>> reversed;
    reversed.reserve(arcs.size());
    for (const auto& [u, v] : arcs) reversed.emplace_back(v, u);
    build_csr(n, arcs, g.out_offsets_, g.out_adj_);
    build_csr(n, reversed, g.in_offsets_, g.in_adj_);
    g.num_edges_ = g.out_adj_.size();
  } else {
    build_csr(n, arcs, g.out_offsets_, g.out_adj_);
    g.num_edges_ = g.out_adj_.size() / 2;
  }
  return g;
}

std::vector<NodeId> Graph::nodes_by_label() const {
  std::vector<NodeId> order(num_nodes());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return labels_[a] < labels_[b]; });
  return order;
}

Graph load_edge_list(std::istream& in, bool directed) {
  std::unordered_map<std::uint64_t, NodeId> dense;
  std::vector<std::uint64_t> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;

  auto intern = [&](std::uint64_t ext) {
    auto [it, inserted] = dense.try_emplace(ext, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(ext);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::string_view first = next_token(rest);
    if (first.empty() || first.front() == '#' || first.front() == '%') continue;
    std::string_view second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two node ids");
    const std::uint64_t u = parse_id(first, line_no);
    const std::uint64_t v = parse_id(second, line_no);
    const NodeId du = intern(u);
    const NodeId dv = intern(v);
    edges.emplace_back(du, dv);
  }

  const std::size_t n = labels.size();
  Graph g = Graph::from_edges(n, edges, directed, std::move(labels));
  if (g.num_edges() == 0) throw EmptyGraphError("edge list contains no edges");
  return g;
}

Graph load_edge_list_file(const std::filesystem::path& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path.string() + "'");
  return load_edge_list(in, directed);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.out_neighbors(u)) {
      if (!g.directed() && v < u) continue;
      out << g.label(u) << ' ' << g.label(v) << '\n';
    }
  }
}

}  // namespace bcapprox
