#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gsum/centrality.hpp"
#include "gsum/graph.hpp"
#include "gsum/summary.hpp"

namespace gsum {

// (n - |supernodes|) / n.
double reduction_in_nodes(const Summary& s);

struct AppUtilityReport {
  CentralityKind kind = CentralityKind::pagerank;
  double t_percent = 0.0;
  std::size_t v_t_size = 0;
  double app_utility = 1.0;
};

// The ceil(t% * n) most central nodes, ties broken by ascending id.
std::vector<NodeId> top_central_nodes(const NodeCentrality& c, double t_percent);

// Mean of 1/|S(v)| over the top-t% central nodes. t_percent in (0, 100].
AppUtilityReport app_utility(const Summary& s, const NodeCentrality& c, double t_percent);

struct EdgeDiscrepancy {
  NodePair edge;
  bool spurious = false;  // true: only in the reconstruction; false: lost
};

struct LosslessReport {
  bool lossless = false;
  std::size_t lost = 0;
  std::size_t spurious = 0;
  std::vector<EdgeDiscrepancy> first_discrepancies;  // at most 10
};

// Compares reconstruct(s) with g edge by edge. Throws CapExceeded above cap.
LosslessReport verify_lossless(const Graph& g, const Summary& s,
                               std::uint64_t cap = kDefaultReconstructionCap);

// "key value" lines.
void write_records(std::ostream& out, const MetaRecords& records);
// Two left-aligned columns padded to the longest key.
void write_table(std::ostream& out, const MetaRecords& records);

MetaRecords to_records(const AppUtilityReport& r);
MetaRecords to_records(const LosslessReport& r);

}  // namespace gsum
