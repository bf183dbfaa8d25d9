#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gsum/centrality.hpp"
#include "gsum/summary.hpp"

namespace gsum {

// Triangles by how many vertices share a supernode: a = all three,
// b = two, c = none.
struct TriangleReport {
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  std::uint64_t count_c = 0;
  std::uint64_t total = 0;
};

// Counts triangles of the original graph from a lossless summary.
// Throws UnsupportedSummary for lossy summaries.
TriangleReport count_triangles(const Summary& s);

using TriangleSink = std::function<void(NodeId, NodeId, NodeId)>;

// Streams each triangle exactly once as an ascending triple: type a, then b,
// then c; generators visited by ascending supernode id.
void enumerate_triangles(const Summary& s, const TriangleSink& sink);

struct SummaryPagerank {
  std::vector<double> supernode_scores;
  std::vector<double> node_scores;
  std::size_t iterations = 0;
  bool converged = false;
};

// Pagerank of the original graph computed on the summary graph; node scores
// equal pagerank(G) with the same options.
SummaryPagerank pagerank_on_summary(const Summary& s, const PagerankOptions& options = {});

// Hop distance between u and v in the original graph; nullopt when
// unreachable.
std::optional<std::uint32_t> shortest_path_length(const Summary& s, NodeId u, NodeId v);

}  // namespace gsum
