#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsum/graph.hpp"

namespace gsum {

using SupernodeId = std::uint32_t;

enum class SupernodeKind : std::uint8_t { singleton, clique, independent_set };

std::string_view to_string(SupernodeKind kind);
std::optional<SupernodeKind> parse_supernode_kind(std::string_view name);

// Canonical superedge, a <= b. a == b is a self-loop.
struct Superedge {
  SupernodeId a = 0;
  SupernodeId b = 0;

  friend auto operator<=>(const Superedge&, const Superedge&) = default;
};

// Relabels an arbitrary labelling of nodes so supernode ids are dense and
// ordered by their smallest member.
std::vector<SupernodeId> canonical_membership(std::span<const std::uint64_t> labels);
std::vector<SupernodeId> canonical_membership(std::span<const SupernodeId> labels);

// A partition of V into supernodes plus a superedge set. Lossless summaries
// carry one kind tag per supernode; lossy ones carry none.
class Summary {
 public:
  Summary() = default;

  // membership[u] is u's supernode; ids must be dense 0..k-1. Superedges are
  // canonicalized and deduplicated. Throws std::invalid_argument when the
  // partition, superedges or kinds are inconsistent.
  Summary(std::vector<SupernodeId> membership, std::vector<Superedge> superedges,
          std::optional<std::vector<SupernodeKind>> kinds = std::nullopt);

  std::size_t num_nodes() const noexcept { return membership_.size(); }
  std::size_t num_supernodes() const noexcept { return member_offsets_.size() - 1; }
  std::size_t num_superedges() const noexcept { return superedges_.size(); }

  SupernodeId supernode_of(NodeId u) const { return membership_.at(u); }
  std::span<const SupernodeId> membership() const noexcept { return membership_; }
  std::span<const NodeId> members(SupernodeId s) const;
  std::size_t size(SupernodeId s) const { return members(s).size(); }

  std::span<const Superedge> superedges() const noexcept { return superedges_; }
  // Supernodes adjacent to s in the summary graph, ascending; includes s itself
  // when s has a self-loop.
  std::span<const SupernodeId> super_neighbors(SupernodeId s) const;
  bool has_self_loop(SupernodeId s) const;

  bool is_lossless() const noexcept { return kinds_.has_value(); }
  // Throws UnsupportedSummary on a lossy summary.
  SupernodeKind kind(SupernodeId s) const;
  const std::optional<std::vector<SupernodeKind>>& kinds() const noexcept { return kinds_; }

  friend bool operator==(const Summary& a, const Summary& b) {
    return a.membership_ == b.membership_ && a.superedges_ == b.superedges_ &&
           a.kinds_ == b.kinds_;
  }

 private:
  std::vector<SupernodeId> membership_;
  std::vector<std::size_t> member_offsets_{0};
  std::vector<NodeId> members_;
  std::vector<Superedge> superedges_;
  std::vector<std::size_t> adj_offsets_{0};
  std::vector<SupernodeId> adjacency_;
  std::optional<std::vector<SupernodeKind>> kinds_;
};

// Number of original edges a reconstruction of s would emit.
std::uint64_t reconstructed_edge_count(const Summary& s);

inline constexpr std::uint64_t kDefaultReconstructionCap = 50'000'000;

// Expands superedges into complete bipartite graphs (a != b) and cliques
// (self-loops). Throws CapExceeded when the implied edge count exceeds cap.
Graph reconstruct(const Summary& s, std::uint64_t cap = kDefaultReconstructionCap);

// Ordered "key value" records for meta.txt.
using MetaRecords = std::vector<std::pair<std::string, std::string>>;

struct SummaryFiles {
  Summary summary;
  MetaRecords meta;
  // Empty when the directory has no node_ids.txt.
  std::vector<std::int64_t> original_ids;
};

// Writes membership.txt, superedges.txt, kinds.txt (lossless only), meta.txt
// and, when original_ids is non-empty, node_ids.txt.
void write_summary(const std::filesystem::path& dir, const Summary& s, const MetaRecords& meta,
                   std::span<const std::int64_t> original_ids = {});
SummaryFiles read_summary(const std::filesystem::path& dir);

// Shortest round-trip decimal for a double.
std::string format_real(double x);

}  // namespace gsum
