#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gsum/centrality.hpp"
#include "gsum/graph.hpp"
#include "gsum/summary.hpp"

namespace gsum {

// Candidate merge pairs in processing order with their weights C_u + C_v.
// Sorted ascending by (weight, u, v) where u < v.
struct MergePairList {
  std::vector<NodePair> pairs;
  std::vector<double> weights;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }
};

// Minimum spanning forest of the two-hop graph under weight C_u + C_v, built
// Prim-style by scanning N(N(v)) on extraction. Ties are broken by the pair
// ids, so the forest equals Kruskal's over the fully sorted two-hop list.
MergePairList two_hop_mst(const Graph& g, std::span<const double> centrality);

inline constexpr std::size_t kDefaultTwoHopPairCap = 5'000'000;

// Every two-hop pair, sorted like two_hop_mst's output. Throws CapExceeded
// when more than cap pairs exist.
MergePairList full_two_hop_list(const Graph& g, std::span<const double> centrality,
                                std::size_t cap = kDefaultTwoHopPairCap);

// Partition after merging pairs[0..t) into singletons, canonically numbered.
std::vector<SupernodeId> merge_prefix(std::size_t n, const MergePairList& pairs, std::size_t t);

// 1 - sum over supernode pairs joined by an edge of min(Sedge, nSedge),
// where nSedge is the weight of the crossing edges and Sedge the spurious
// weight of the missing pairs. One pass over E.
double compute_utility(const Graph& g, const EdgeWeightModel& model,
                       std::span<const SupernodeId> membership);

// Superedge for every supernode pair whose Sedge <= nSedge. No kind tags.
Summary build_superedges_lossy(const Graph& g, const EdgeWeightModel& model,
                               std::span<const SupernodeId> membership);

struct LossyResult {
  Summary summary;
  double utility = 1.0;
  std::size_t prefix_length = 0;  // t*
  std::size_t pair_count = 0;     // |H|
  std::size_t probes = 0;
};

// Binary search for the longest prefix t of the merge list with
// utility >= tau, relying on utility being non-increasing in t.
// tau must lie in (0, 1].
LossyResult summarize_lossy(const Graph& g, const EdgeWeightModel& model,
                            const MergePairList& pairs, double tau);
// Uses two_hop_mst over the model's centrality.
LossyResult summarize_lossy(const Graph& g, const EdgeWeightModel& model, double tau);

}  // namespace gsum
