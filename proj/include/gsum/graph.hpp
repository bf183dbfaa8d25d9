#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace gsum {

using NodeId = std::uint32_t;

// Unordered node pair stored with u < v.
struct NodePair {
  NodeId u = 0;
  NodeId v = 0;

  NodePair() = default;
  NodePair(NodeId a, NodeId b);

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

// Immutable undirected simple graph in CSR form. Neighbor lists are strictly
// ascending, symmetric and free of self-loops.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Builds a simple graph over nodes 0..n-1. Self-loops and duplicates
  // (in either direction) are dropped.
  static Graph from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);
  static Graph from_edges(std::size_t n, std::span<const NodePair> edges);

  std::size_t num_nodes() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  // Throws std::out_of_range for u >= num_nodes().
  std::span<const NodeId> neighbors(NodeId u) const;
  std::size_t degree(NodeId u) const { return neighbors(u).size(); }
  bool has_edge(NodeId u, NodeId v) const;

  // Canonical edges, ascending lexicographic.
  std::vector<NodePair> edges() const;

  template <class F>
  void for_each_edge(F&& f) const {
    const auto n = static_cast<NodeId>(num_nodes());
    for (NodeId u = 0; u < n; ++u) {
      for (std::size_t k = offsets_[u]; k < offsets_[u + 1]; ++k) {
        if (adjacency_[k] > u) f(u, adjacency_[k]);
      }
    }
  }

  double average_degree() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

// Graph plus the compaction applied while reading it.
struct LoadedGraph {
  Graph graph;
  // original_ids[i] is the id the input used for compact node i.
  std::vector<std::int64_t> original_ids;
  std::size_t lines_read = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

// Edge-list text: two base-10 integers per line, '#' comments and blank lines
// skipped. Directions, duplicates and self-loops are ignored; ids are
// compacted to 0..n-1 in first-appearance order.
LoadedGraph read_edge_list(std::istream& in);
LoadedGraph load_edge_list(const std::filesystem::path& path);

// Writes each canonical edge once as "u v\n" in ascending order.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

// N(N(v)) \ {v}, ascending. Computed from the adjacency, never materializing
// the two-hop graph.
std::vector<NodeId> two_hop_neighbors(const Graph& g, NodeId v);

// Scratch-reusing variant for hot loops: output is in discovery order,
// marks must be sized num_nodes() and stamp must not occur in it yet.
void two_hop_neighbors(const Graph& g, NodeId v, std::vector<NodeId>& out,
                       std::vector<std::uint32_t>& marks, std::uint32_t stamp);

}  // namespace gsum
