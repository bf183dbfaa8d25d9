#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gsum/graph.hpp"

namespace gsum {

enum class CentralityKind { uniform, pagerank, degree, eigenvector, betweenness };

std::string_view to_string(CentralityKind kind);
std::optional<CentralityKind> parse_centrality_kind(std::string_view name);

struct NodeCentrality {
  CentralityKind kind = CentralityKind::uniform;
  std::vector<double> scores;
  // Pagerank: true when scores are scaled to sum to 1 rather than n.
  bool normalized = false;
  bool converged = true;
  std::size_t iterations = 0;
};

struct PagerankOptions {
  double damping = 0.85;
  double tol = 1e-10;
  std::size_t max_iter = 200;
};

// Power iteration of P(u) = (1-d) + d * sum_{w in N(u)} P(w)/|N(w)| from
// P = 1, stopping once the L1 change drops below tol. Isolated nodes never send
// mass and settle at 1-d. Non-convergence is reported via `converged`.
NodeCentrality pagerank(const Graph& g, const PagerankOptions& options = {});

NodeCentrality uniform_centrality(const Graph& g);
NodeCentrality degree_centrality(const Graph& g);

// Principal eigenvector of the adjacency matrix, L2 normalized. Iterates
// (A + I) so that bipartite components do not oscillate.
NodeCentrality eigenvector_centrality(const Graph& g, double tol = 1e-10,
                                      std::size_t max_iter = 10000);

inline constexpr std::size_t kDefaultBetweennessCap = 20000;

// Exact unweighted betweenness (Brandes), each unordered pair counted once.
// Throws CapExceeded when n > cap.
NodeCentrality betweenness_centrality(const Graph& g,
                                      std::size_t cap = kDefaultBetweennessCap);

// Dispatches on kind; pagerank and eigenvector share options.tol/max_iter.
NodeCentrality compute_centrality(const Graph& g, CentralityKind kind,
                                  const PagerankOptions& options = {},
                                  std::size_t betweenness_cap = kDefaultBetweennessCap);

// "node_id value\n" per node, shortest round-trip decimal.
void write_centrality(const NodeCentrality& c, std::ostream& out);

// Edge weights C(u,v) = (C_u + C_v) / Z with Z the sum over actual edges,
// and a uniform spurious weight 1 / (C(n,2) - m). The graph must outlive the
// model.
class EdgeWeightModel {
 public:
  // Throws ModelUndefined for graphs without a non-edge or with Z = 0.
  EdgeWeightModel(const Graph& g, NodeCentrality centrality);

  const NodeCentrality& centrality() const noexcept { return centrality_; }
  double actual_norm() const noexcept { return actual_norm_; }
  double spurious_weight() const noexcept { return 1.0 / non_edge_count_; }
  // C(n,2) - m as a real; spurious costs are computed as count / this.
  double non_edge_count() const noexcept { return non_edge_count_; }

  // Throws std::invalid_argument when (u,v) is not an edge of g.
  double edge_weight(NodeId u, NodeId v) const;

  // Unchecked weight for callers that already walk the adjacency.
  double weight(NodeId u, NodeId v) const noexcept {
    return (centrality_.scores[u] + centrality_.scores[v]) / actual_norm_;
  }

 private:
  const Graph* graph_;
  NodeCentrality centrality_;
  double actual_norm_ = 0.0;
  double non_edge_count_ = 0.0;
};

EdgeWeightModel build_weight_model(const Graph& g, NodeCentrality centrality);

}  // namespace gsum
