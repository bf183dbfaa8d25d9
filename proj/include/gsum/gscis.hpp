#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gsum/graph.hpp"
#include "gsum/summary.hpp"

namespace gsum {

// Maps an ordered id sequence to 64 bits. Collisions only cost filter time.
using SequenceHash = std::function<std::uint64_t(std::span<const NodeId>)>;

// Deterministic seeded 64-bit sequence hash.
SequenceHash seeded_sequence_hash(std::uint64_t seed);

struct Bucket {
  std::uint64_t key = 0;
  std::vector<NodeId> members;  // ascending
};

// Buckets keyed by h(sorted(N(v) + v)) and h(sorted(N(v))). Only keys shared by
// two or more nodes form a bucket; buckets appear in order of their smallest
// member.
struct CandidateBuckets {
  std::vector<Bucket> clique;
  std::vector<Bucket> independent_set;
};

CandidateBuckets candidate_supernodes(const Graph& g, const SequenceHash& h);

// True when u and v may share a clique supernode: N(u) + u == N(v) + v.
bool same_closed_neighborhood(const Graph& g, NodeId u, NodeId v);
// True when u and v may share an independent-set supernode: N(u) == N(v).
bool same_open_neighborhood(const Graph& g, NodeId u, NodeId v);

// Splits each bucket into exact classes for the given kind (clique or
// independent_set), pivoting on the smallest remaining member. Only classes
// of two or more nodes are returned. Nodes with excluded[u] set are ignored.
std::vector<std::vector<NodeId>> filter_supernodes(const Graph& g,
                                                   std::span<const Bucket> buckets,
                                                   SupernodeKind type,
                                                   std::span<const bool> excluded = {});

// Superedge between S and S' iff an edge crosses them; self-loop on every clique
// supernode. Requires a lossless partition.
std::vector<Superedge> build_superedges_lossless(const Graph& g,
                                                 std::span<const SupernodeId> membership,
                                                 std::span<const SupernodeKind> kinds);

// Quadratic reference: greedy grouping by N(u) == N(v) or N(u)\{v} == N(v)\{u}.
Summary summarize_naive(const Graph& g);

// Hash-bucket pipeline producing the minimum-supernode lossless summary.
Summary summarize(const Graph& g, std::uint64_t seed = 42);
Summary summarize(const Graph& g, const SequenceHash& h);

}  // namespace gsum
