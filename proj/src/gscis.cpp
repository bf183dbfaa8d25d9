#include "gsum/gscis.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace gsum {

namespace {

constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Groups nodes by key with a flat open-addressing table; keys are already
// well mixed, so their low bits index the table directly. Only keys shared by
// two or more nodes become buckets.
std::vector<Bucket> bucketize(const std::vector<std::uint64_t>& keys) {
  constexpr std::uint32_t kEmpty = static_cast<std::uint32_t>(-1);
  std::size_t capacity = 16;
  while (capacity < 2 * keys.size()) capacity *= 2;
  const std::size_t mask = capacity - 1;
  std::vector<std::uint32_t> slot_first(capacity, kEmpty);  // first node with the key
  std::vector<std::uint32_t> group(keys.size());             // node -> its first node
  std::vector<std::uint32_t> count(keys.size(), 0);

  for (NodeId v = 0; v < keys.size(); ++v) {
    std::size_t i = keys[v] & mask;
    while (slot_first[i] != kEmpty && keys[slot_first[i]] != keys[v]) i = (i + 1) & mask;
    if (slot_first[i] == kEmpty) slot_first[i] = v;
    group[v] = slot_first[i];
    ++count[group[v]];
  }

  std::vector<std::uint32_t> bucket_of(keys.size(), kEmpty);
  std::vector<Bucket> buckets;
  for (NodeId v = 0; v < keys.size(); ++v) {
    const std::uint32_t first = group[v];
    if (count[first] < 2) continue;
    if (bucket_of[first] == kEmpty) {
      bucket_of[first] = static_cast<std::uint32_t>(buckets.size());
      buckets.push_back({keys[v], {}});
      buckets.back().members.reserve(count[first]);
    }
    buckets[bucket_of[first]].members.push_back(v);
  }
  return buckets;
}

// Compares N(u) + {u} against N(v) + {v} without materializing either.
bool closed_equal(std::span<const NodeId> nu, NodeId u, std::span<const NodeId> nv, NodeId v) {
  if (nu.size() != nv.size()) return false;
  std::size_t i = 0, j = 0;
  bool u_done = false, v_done = false;
  auto next = [](std::span<const NodeId> n, std::size_t& k, NodeId self, bool& self_done) {
    if (!self_done && (k == n.size() || self < n[k])) {
      self_done = true;
      return self;
    }
    return n[k++];
  };
  for (std::size_t step = 0; step <= nu.size(); ++step) {
    if (next(nu, i, u, u_done) != next(nv, j, v, v_done)) return false;
  }
  return true;
}

}  // namespace

SequenceHash seeded_sequence_hash(std::uint64_t seed) {
  return [seed](std::span<const NodeId> seq) {
    std::uint64_t h = mix64(seed ^ 0x9e3779b97f4a7c15ULL) ^ seq.size();
    for (NodeId x : seq) h = mix64(h + 0x9e3779b97f4a7c15ULL + x);
    return h;
  };
}

CandidateBuckets candidate_supernodes(const Graph& g, const SequenceHash& h) {
  const std::size_t n = g.num_nodes();
  std::vector<std::uint64_t> clique_keys(n);
  std::vector<std::uint64_t> is_keys(n);
  std::vector<NodeId> closed;
  for (NodeId v = 0; v < n; ++v) {
    const auto nv = g.neighbors(v);
    closed.assign(nv.begin(), nv.end());
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    clique_keys[v] = h(closed);
    is_keys[v] = h(nv);
  }
  return {bucketize(clique_keys), bucketize(is_keys)};
}

bool same_closed_neighborhood(const Graph& g, NodeId u, NodeId v) {
  return closed_equal(g.neighbors(u), u, g.neighbors(v), v);
}

bool same_open_neighborhood(const Graph& g, NodeId u, NodeId v) {
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  return std::equal(nu.begin(), nu.end(), nv.begin(), nv.end());
}

std::vector<std::vector<NodeId>> filter_supernodes(const Graph& g,
                                                   std::span<const Bucket> buckets,
                                                   SupernodeKind type,
                                                   std::span<const bool> excluded) {
  if (type == SupernodeKind::singleton) {
    throw std::invalid_argument("filter_supernodes needs clique or independent_set");
  }
  const bool clique = type == SupernodeKind::clique;
  std::vector<std::vector<NodeId>> groups;
  std::vector<NodeId> remaining;
  std::vector<NodeId> rest;
  for (const auto& bucket : buckets) {
    if (bucket.members.size() < 2) continue;
    remaining.clear();
    for (NodeId v : bucket.members) {
      if (excluded.empty() || !excluded[v]) remaining.push_back(v);
    }
    while (remaining.size() >= 2) {
      const NodeId pivot = remaining.front();
      std::vector<NodeId> group{pivot};
      rest.clear();
      for (std::size_t k = 1; k < remaining.size(); ++k) {
        const NodeId v = remaining[k];
        const bool match = clique ? same_closed_neighborhood(g, pivot, v)
                                  : same_open_neighborhood(g, pivot, v);
        (match ? group : rest).push_back(v);
      }
      if (group.size() >= 2) groups.push_back(std::move(group));
      remaining.swap(rest);
    }
  }
  return groups;
}

std::vector<Superedge> build_superedges_lossless(const Graph& g,
                                                 std::span<const SupernodeId> membership,
                                                 std::span<const SupernodeKind> kinds) {
  const std::size_t k = kinds.size();
  std::vector<NodeId> representative(k, static_cast<NodeId>(-1));
  for (NodeId u = membership.size(); u-- > 0;) representative[membership[u]] = u;

  std::vector<Superedge> superedges;
  std::vector<SupernodeId> targets;
  std::vector<std::uint32_t> marks(k, static_cast<std::uint32_t>(-1));
  for (SupernodeId s = 0; s < k; ++s) {
    targets.clear();
    for (NodeId w : g.neighbors(representative[s])) {
      const SupernodeId t = membership[w];
      if (t < s || marks[t] == s) continue;
      marks[t] = s;
      targets.push_back(t);
    }
    if (kinds[s] == SupernodeKind::clique && marks[s] != s) targets.push_back(s);
    std::sort(targets.begin(), targets.end());
    for (SupernodeId t : targets) superedges.push_back({s, t});
  }
  return superedges;
}

namespace {

Summary assemble(const Graph& g, std::vector<std::uint64_t> labels,
                 const std::vector<SupernodeKind>& node_kind) {
  auto membership = canonical_membership(labels);
  std::size_t k = 0;
  for (SupernodeId s : membership) k = std::max<std::size_t>(k, std::size_t{s} + 1);
  std::vector<SupernodeKind> kinds(k, SupernodeKind::singleton);
  for (NodeId u = 0; u < membership.size(); ++u) kinds[membership[u]] = node_kind[u];
  auto superedges = build_superedges_lossless(g, membership, kinds);
  return Summary(std::move(membership), std::move(superedges), std::move(kinds));
}

}  // namespace

Summary summarize_naive(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<bool> status(n, false);
  std::vector<std::uint64_t> labels(n);
  std::vector<SupernodeKind> node_kind(n, SupernodeKind::singleton);
  std::vector<NodeId> without_v, without_u;

  for (NodeId u = 0; u < n; ++u) {
    if (status[u]) continue;
    status[u] = true;
    labels[u] = u;
    const auto nu = g.neighbors(u);
    for (NodeId v = u + 1; v < n; ++v) {
      if (status[v]) continue;
      const auto nv = g.neighbors(v);
      bool match = std::equal(nu.begin(), nu.end(), nv.begin(), nv.end());
      SupernodeKind kind = SupernodeKind::independent_set;
      if (!match) {
        without_v.clear();
        without_u.clear();
        std::copy_if(nu.begin(), nu.end(), std::back_inserter(without_v),
                     [v](NodeId w) { return w != v; });
        std::copy_if(nv.begin(), nv.end(), std::back_inserter(without_u),
                     [u](NodeId w) { return w != u; });
        match = without_v == without_u;
        kind = SupernodeKind::clique;
      }
      if (match) {
        status[v] = true;
        labels[v] = u;
        node_kind[u] = node_kind[v] = kind;
      }
    }
  }
  return assemble(g, std::move(labels), node_kind);
}

Summary summarize(const Graph& g, const SequenceHash& h) {
  const std::size_t n = g.num_nodes();
  const auto buckets = candidate_supernodes(g, h);

  std::vector<std::uint64_t> labels(n);
  std::vector<SupernodeKind> node_kind(n, SupernodeKind::singleton);
  // Nodes already placed in a clique supernode.
  std::unique_ptr<bool[]> grouped(new bool[n]());

  auto claim = [&](const std::vector<std::vector<NodeId>>& groups, SupernodeKind kind) {
    for (const auto& group : groups) {
      for (NodeId v : group) {
        grouped[v] = true;
        labels[v] = group.front();
        node_kind[v] = kind;
      }
    }
  };
  claim(filter_supernodes(g, buckets.clique, SupernodeKind::clique), SupernodeKind::clique);
  claim(filter_supernodes(g, buckets.independent_set, SupernodeKind::independent_set,
                          std::span<const bool>(grouped.get(), n)),
        SupernodeKind::independent_set);
  for (NodeId u = 0; u < n; ++u) {
    if (!grouped[u]) labels[u] = u;
  }
  return assemble(g, std::move(labels), node_kind);
}

Summary summarize(const Graph& g, std::uint64_t seed) {
  return summarize(g, seeded_sequence_hash(seed));
}

}  // namespace gsum
