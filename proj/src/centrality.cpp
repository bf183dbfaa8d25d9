#include "gsum/centrality.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gsum/error.hpp"

namespace gsum {

std::string_view to_string(CentralityKind kind) {
  switch (kind) {
    case CentralityKind::uniform: return "uniform";
    case CentralityKind::pagerank: return "pagerank";
    case CentralityKind::degree: return "degree";
    case CentralityKind::eigenvector: return "eigenvector";
    case CentralityKind::betweenness: return "betweenness";
  }
  return "unknown";
}

std::optional<CentralityKind> parse_centrality_kind(std::string_view name) {
  for (auto kind : {CentralityKind::uniform, CentralityKind::pagerank, CentralityKind::degree,
                    CentralityKind::eigenvector, CentralityKind::betweenness}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

void require_nonempty(const Graph& g, const char* what) {
  if (g.num_nodes() == 0) throw std::invalid_argument(std::string(what) + " on empty graph");
}

}  // namespace

NodeCentrality pagerank(const Graph& g, const PagerankOptions& options) {
  require_nonempty(g, "pagerank");
  if (!(options.tol > 0.0)) throw std::invalid_argument("pagerank tol must be positive");
  if (options.damping < 0.0 || options.damping > 1.0) {
    throw std::invalid_argument("pagerank damping must lie in [0,1]");
  }
  const std::size_t n = g.num_nodes();
  const double d = options.damping;

  NodeCentrality result{CentralityKind::pagerank, std::vector<double>(n, 1.0), false, false, 0};
  std::vector<double> share(n);
  std::vector<double> next(n);
  auto& rank = result.scores;

  while (result.iterations < options.max_iter) {
    for (NodeId w = 0; w < n; ++w) {
      const auto deg = g.degree(w);
      share[w] = deg == 0 ? 0.0 : rank[w] / static_cast<double>(deg);
    }
    double change = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      double acc = 0.0;
      for (NodeId w : g.neighbors(u)) acc += share[w];
      next[u] = (1.0 - d) + d * acc;
      change += std::abs(next[u] - rank[u]);
    }
    rank.swap(next);
    ++result.iterations;
    if (change < options.tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

NodeCentrality uniform_centrality(const Graph& g) {
  return {CentralityKind::uniform, std::vector<double>(g.num_nodes(), 1.0), false, true, 0};
}

NodeCentrality degree_centrality(const Graph& g) {
  require_nonempty(g, "degree centrality");
  NodeCentrality result{CentralityKind::degree, std::vector<double>(g.num_nodes()), false, true, 0};
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    result.scores[u] = static_cast<double>(g.degree(u));
  }
  return result;
}

NodeCentrality eigenvector_centrality(const Graph& g, double tol, std::size_t max_iter) {
  require_nonempty(g, "eigenvector centrality");
  const std::size_t n = g.num_nodes();
  NodeCentrality result{CentralityKind::eigenvector,
                        std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n))), false,
                        false, 0};
  auto& x = result.scores;
  std::vector<double> y(n);
  while (result.iterations < max_iter) {
    double norm = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      double acc = x[u];
      for (NodeId w : g.neighbors(u)) acc += x[w];
      y[u] = acc;
      norm += acc * acc;
    }
    norm = std::sqrt(norm);
    double change = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      y[u] /= norm;
      change += std::abs(y[u] - x[u]);
    }
    x.swap(y);
    ++result.iterations;
    if (change < tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

NodeCentrality betweenness_centrality(const Graph& g, std::size_t cap) {
  require_nonempty(g, "betweenness centrality");
  const std::size_t n = g.num_nodes();
  if (n > cap) {
    throw CapExceeded("exact betweenness refused for n=" + std::to_string(n) + " > cap " +
                      std::to_string(cap) + "; sampling-based betweenness is not supported");
  }
  NodeCentrality result{CentralityKind::betweenness, std::vector<double>(n, 0.0), false, true, 0};
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::int64_t> dist(n);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : g.neighbors(w)) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) result.scores[w] += delta[w];
    }
  }
  for (auto& b : result.scores) b /= 2.0;
  return result;
}

NodeCentrality compute_centrality(const Graph& g, CentralityKind kind,
                                  const PagerankOptions& options, std::size_t betweenness_cap) {
  switch (kind) {
    case CentralityKind::uniform: return uniform_centrality(g);
    case CentralityKind::pagerank: return pagerank(g, options);
    case CentralityKind::degree: return degree_centrality(g);
    case CentralityKind::eigenvector:
      return eigenvector_centrality(g, options.tol, options.max_iter);
    case CentralityKind::betweenness: return betweenness_centrality(g, betweenness_cap);
  }
  throw std::invalid_argument("unknown centrality kind");
}

void write_centrality(const NodeCentrality& c, std::ostream& out) {
  char buf[64];
  for (std::size_t u = 0; u < c.scores.size(); ++u) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c.scores[u]);
    out << u << ' ' << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << '\n';
  }
}

EdgeWeightModel::EdgeWeightModel(const Graph& g, NodeCentrality centrality)
    : graph_(&g), centrality_(std::move(centrality)) {
  const std::size_t n = g.num_nodes();
  if (centrality_.scores.size() != n) {
    throw std::invalid_argument("centrality length does not match node count");
  }
  for (double c : centrality_.scores) {
    if (!std::isfinite(c) || c < 0.0) {
      throw std::invalid_argument("centrality scores must be finite and non-negative");
    }
  }
  const std::uint64_t pairs = n < 2 ? 0 : std::uint64_t{n} * (n - 1) / 2;
  const std::uint64_t m = g.num_edges();
  if (pairs <= m) {
    throw ModelUndefined("weight model undefined: graph has no non-edge (complete graph)");
  }
  non_edge_count_ = static_cast<double>(pairs - m);

  double z = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    z += static_cast<double>(g.degree(u)) * centrality_.scores[u];
  }
  if (!(z > 0.0)) {
    throw ModelUndefined("degenerate weights: edge centrality sum is zero");
  }
  actual_norm_ = z;
}

double EdgeWeightModel::edge_weight(NodeId u, NodeId v) const {
  if (u == v || !graph_->has_edge(u, v)) {
    throw std::invalid_argument("edge_weight queried for a non-edge; spurious pairs use "
                                "spurious_weight()");
  }
  return weight(u, v);
}

EdgeWeightModel build_weight_model(const Graph& g, NodeCentrality centrality) {
  return EdgeWeightModel(g, std::move(centrality));
}

}  // namespace gsum
