#include "gsum/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "gsum/error.hpp"

namespace gsum {

NodePair::NodePair(NodeId a, NodeId b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("NodePair requires distinct endpoints");
}

namespace {

void build_csr(std::size_t n, std::vector<std::pair<NodeId, NodeId>> arcs,
                std::vector<std::size_t>& offsets, std::vector<NodeId>& adjacency) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  offsets.assign(n + 1, 0);
  for (const auto& [a, b] : arcs) ++offsets[a + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  adjacency.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) adjacency[i] = arcs[i].second;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges) {
  if (n > std::numeric_limits<NodeId>::max()) {
    throw std::length_error("node count exceeds the 32-bit node id range");
  }
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw std::out_of_range("edge endpoint out of range");
    if (a == b) continue;
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, a);
  }
  Graph g;
  build_csr(n, std::move(arcs), g.offsets_, g.adjacency_);
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const NodePair> edges) {
  std::vector<std::pair<NodeId, NodeId>> raw;
  raw.reserve(edges.size());
  for (const auto& e : edges) raw.emplace_back(e.u, e.v);
  return from_edges(n, raw);
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  if (u >= num_nodes()) {
    throw std::out_of_range("node " + std::to_string(u) + " out of range (n=" +
                            std::to_string(num_nodes()) + ")");
  }
  return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nu = neighbors(u);
  if (v >= num_nodes()) throw std::out_of_range("node out of range");
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<NodePair> Graph::edges() const {
  std::vector<NodePair> out;
  out.reserve(num_edges());
  for_each_edge([&](NodeId u, NodeId v) { out.emplace_back(u, v); });
  return out;
}

double Graph::average_degree() const noexcept {
  if (num_nodes() == 0) return 0.0;
  return 2.0 * static_cast<double>(num_edges()) / static_cast<double>(num_nodes());
}

LoadedGraph read_edge_list(std::istream& in) {
  LoadedGraph result;
  std::unordered_map<std::int64_t, NodeId> compact;
  std::vector<std::pair<NodeId, NodeId>> edges;

  auto intern = [&](std::int64_t id) {
    auto [it, inserted] = compact.try_emplace(id, 0);
    if (inserted) {
      if (result.original_ids.size() >= std::numeric_limits<NodeId>::max()) {
        throw std::length_error("node count exceeds the 32-bit node id range");
      }
      it->second = static_cast<NodeId>(result.original_ids.size());
      result.original_ids.push_back(id);
    }
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view rest(line);
    auto skip_ws = [&] {
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) {
        rest.remove_prefix(1);
      }
    };
    skip_ws();
    if (rest.empty() || rest.front() == '#') continue;

    std::int64_t ids[2];
    for (auto& id : ids) {
      skip_ws();
      if (rest.empty()) throw ParseError("expected two integer tokens", lineno);
      const char* first = rest.data();
      const char* last = first + rest.size();
      auto [ptr, ec] = std::from_chars(first, last, id);
      if (ec != std::errc{} ||
          (ptr != last && !std::isspace(static_cast<unsigned char>(*ptr)))) {
        throw ParseError("non-integer token", lineno);
      }
      if (id < 0) throw ParseError("negative node id", lineno);
      rest.remove_prefix(static_cast<std::size_t>(ptr - first));
    }
    skip_ws();
    if (!rest.empty()) throw ParseError("expected exactly two tokens", lineno);

    ++result.lines_read;
    const NodeId a = intern(ids[0]);
    const NodeId b = intern(ids[1]);
    if (a == b) {
      ++result.self_loops_dropped;
      continue;
    }
    edges.emplace_back(a, b);
  }
  if (in.bad()) throw IoError("read failure");

  result.graph = Graph::from_edges(result.original_ids.size(), edges);
  result.duplicates_dropped = edges.size() - result.graph.num_edges();
  return result;
}

LoadedGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  g.for_each_edge([&](NodeId u, NodeId v) { out << u << ' ' << v << '\n'; });
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_edge_list(g, out);
  if (!out) throw IoError("write failure on " + path.string());
}

void two_hop_neighbors(const Graph& g, NodeId v, std::vector<NodeId>& out,
                       std::vector<std::uint32_t>& marks, std::uint32_t stamp) {
  out.clear();
  marks[v] = stamp;
  for (NodeId b : g.neighbors(v)) {
    for (NodeId w : g.neighbors(b)) {
      if (marks[w] != stamp) {
        marks[w] = stamp;
        out.push_back(w);
      }
    }
  }
}

std::vector<NodeId> two_hop_neighbors(const Graph& g, NodeId v) {
  g.neighbors(v);  // range check
  std::vector<std::uint32_t> marks(g.num_nodes(), 0);
  std::vector<NodeId> out;
  two_hop_neighbors(g, v, out, marks, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gsum
