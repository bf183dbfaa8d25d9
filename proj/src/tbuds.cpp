#include "gsum/tbuds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gsum/error.hpp"
#include "gsum/union_find.hpp"

namespace gsum {

namespace {

struct PairKey {
  double weight = std::numeric_limits<double>::infinity();
  NodeId lo = std::numeric_limits<NodeId>::max();
  NodeId hi = std::numeric_limits<NodeId>::max();

  friend bool operator<(const PairKey& a, const PairKey& b) {
    return std::tie(a.weight, a.lo, a.hi) < std::tie(b.weight, b.lo, b.hi);
  }
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

PairKey make_key(NodeId a, NodeId b, std::span<const double> c) {
  return {c[a] + c[b], std::min(a, b), std::max(a, b)};
}

void check_centrality(const Graph& g, std::span<const double> c) {
  if (c.size() != g.num_nodes()) {
    throw std::invalid_argument("centrality length does not match node count");
  }
}

MergePairList sorted_list(std::vector<PairKey> keys) {
  std::sort(keys.begin(), keys.end());
  MergePairList out;
  out.pairs.reserve(keys.size());
  out.weights.reserve(keys.size());
  for (const auto& k : keys) {
    out.pairs.emplace_back(k.lo, k.hi);
    out.weights.push_back(k.weight);
  }
  return out;
}

// Members of each supernode in CSR form.
struct Blocks {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> nodes;

  explicit Blocks(std::span<const SupernodeId> membership) {
    std::size_t k = 0;
    for (SupernodeId s : membership) k = std::max<std::size_t>(k, std::size_t{s} + 1);
    offsets.assign(k + 1, 0);
    for (SupernodeId s : membership) ++offsets[s + 1];
    for (std::size_t s = 0; s < k; ++s) offsets[s + 1] += offsets[s];
    nodes.resize(membership.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (NodeId u = 0; u < membership.size(); ++u) nodes[cursor[membership[u]]++] = u;
  }

  std::size_t count() const noexcept { return offsets.size() - 1; }
  std::uint64_t size(std::size_t s) const noexcept { return offsets[s + 1] - offsets[s]; }
};

// Visits every supernode pair (si <= sj) joined by at least one edge, with
// their edge count and summed edge weight, in ascending si and first-touch sj
// order. Each edge is counted once.
template <class F>
void for_each_superpair(const Graph& g, const EdgeWeightModel& model,
                        std::span<const SupernodeId> membership, F&& visit) {
  if (membership.size() != g.num_nodes()) {
    throw std::invalid_argument("membership length does not match node count");
  }
  const Blocks blocks(membership);
  const std::size_t k = blocks.count();
  const auto& c = model.centrality().scores;
  const double z = model.actual_norm();

  // Supernode and centrality side by side: one cache line per neighbor lookup.
  struct NodeInfo {
    SupernodeId block;
    double centrality;
  };
  std::vector<NodeInfo> info(membership.size());
  for (NodeId u = 0; u < membership.size(); ++u) info[u] = {membership[u], c[u]};

  struct Tally {
    std::uint64_t count = 0;
    double sum = 0.0;
  };
  std::vector<Tally> tally(k);
  std::vector<SupernodeId> touched;

  for (SupernodeId si = 0; si < k; ++si) {
    touched.clear();
    for (std::size_t idx = blocks.offsets[si]; idx < blocks.offsets[si + 1]; ++idx) {
      const NodeId u = blocks.nodes[idx];
      const double cu = info[u].centrality;
      for (NodeId v : g.neighbors(u)) {
        const SupernodeId sj = info[v].block;
        if (sj < si || (sj == si && v < u)) continue;
        Tally& t = tally[sj];
        if (t.count == 0) touched.push_back(sj);
        ++t.count;
        t.sum += (cu + info[v].centrality) / z;
      }
    }
    for (SupernodeId sj : touched) {
      const std::uint64_t a = blocks.size(si);
      const std::uint64_t pairs = si == sj ? a * (a - 1) / 2 : a * blocks.size(sj);
      const double sedge = static_cast<double>(pairs - tally[sj].count) / model.non_edge_count();
      visit(si, sj, sedge, tally[sj].sum);
      tally[sj] = Tally{};
    }
  }
}

}  // namespace

MergePairList two_hop_mst(const Graph& g, std::span<const double> centrality) {
  check_centrality(g, centrality);
  const std::size_t n = g.num_nodes();

  struct Entry {
    PairKey key;
    NodeId node;
    NodeId parent;
    bool operator>(const Entry& o) const { return o.key < key; }
  };
  constexpr NodeId kNoParent = std::numeric_limits<NodeId>::max();

  std::vector<PairKey> best(n);
  std::vector<char> in_tree(n, 0);
  std::vector<std::uint32_t> marks(n, 0);
  std::vector<NodeId> reach;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<PairKey> tree;
  tree.reserve(n);
  std::uint32_t stamp = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (in_tree[root]) continue;
    queue.push({PairKey{0.0, root, root}, root, kNoParent});
    while (!queue.empty()) {
      const Entry top = queue.top();
      queue.pop();
      const NodeId v = top.node;
      if (in_tree[v]) continue;
      in_tree[v] = 1;
      if (top.parent != kNoParent) tree.push_back(top.key);

      two_hop_neighbors(g, v, reach, marks, ++stamp);
      for (NodeId w : reach) {
        if (in_tree[w]) continue;
        const PairKey cand = make_key(v, w, centrality);
        if (cand < best[w]) {
          best[w] = cand;
          queue.push({cand, w, v});
        }
      }
    }
  }
  return sorted_list(std::move(tree));
}

MergePairList full_two_hop_list(const Graph& g, std::span<const double> centrality,
                                std::size_t cap) {
  check_centrality(g, centrality);
  const std::size_t n = g.num_nodes();
  std::vector<std::uint32_t> marks(n, 0);
  std::vector<NodeId> reach;
  std::vector<PairKey> keys;
  for (NodeId v = 0; v < n; ++v) {
    two_hop_neighbors(g, v, reach, marks, v + 1);
    for (NodeId w : reach) {
      if (w <= v) continue;
      if (keys.size() == cap) {
        throw CapExceeded("two-hop pair list exceeds cap " + std::to_string(cap));
      }
      keys.push_back(make_key(v, w, centrality));
    }
  }
  return sorted_list(std::move(keys));
}

std::vector<SupernodeId> merge_prefix(std::size_t n, const MergePairList& pairs, std::size_t t) {
  if (t > pairs.size()) throw std::out_of_range("prefix longer than the merge list");
  UnionFind sets(n);
  for (std::size_t i = 0; i < t; ++i) sets.unite(pairs.pairs[i].u, pairs.pairs[i].v);
  std::vector<SupernodeId> roots(n);
  for (NodeId u = 0; u < n; ++u) roots[u] = sets.find(u);
  return canonical_membership(roots);
}

double compute_utility(const Graph& g, const EdgeWeightModel& model,
                       std::span<const SupernodeId> membership) {
  long double loss = 0.0L;
  for_each_superpair(g, model, membership,
                     [&](SupernodeId, SupernodeId, double sedge, double nsedge) {
                       loss += std::min(sedge, nsedge);
                     });
  return std::max(0.0, static_cast<double>(1.0L - loss));
}

Summary build_superedges_lossy(const Graph& g, const EdgeWeightModel& model,
                               std::span<const SupernodeId> membership) {
  std::vector<Superedge> superedges;
  for_each_superpair(g, model, membership,
                     [&](SupernodeId si, SupernodeId sj, double sedge, double nsedge) {
                       if (sedge <= nsedge) superedges.push_back({si, sj});
                     });
  return Summary(std::vector<SupernodeId>(membership.begin(), membership.end()),
                 std::move(superedges));
}

LossyResult summarize_lossy(const Graph& g, const EdgeWeightModel& model,
                            const MergePairList& pairs, double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("utility threshold must lie in (0, 1]");
  }
  const std::size_t n = g.num_nodes();
  LossyResult result;
  result.pair_count = pairs.size();

  std::size_t lo = 0;
  std::size_t hi = pairs.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    const auto membership = merge_prefix(n, pairs, mid);
    ++result.probes;
    if (compute_utility(g, model, membership) >= tau) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const auto membership = merge_prefix(n, pairs, lo);
  result.prefix_length = lo;
  result.utility = compute_utility(g, model, membership);
  result.summary = build_superedges_lossy(g, model, membership);
  return result;
}

LossyResult summarize_lossy(const Graph& g, const EdgeWeightModel& model, double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("utility threshold must lie in (0, 1]");
  }
  return summarize_lossy(g, model, two_hop_mst(g, model.centrality().scores), tau);
}

}  // namespace gsum
