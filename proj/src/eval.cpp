#include "gsum/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gsum {

double reduction_in_nodes(const Summary& s) {
  if (s.num_nodes() == 0) throw std::invalid_argument("reduction in nodes needs n >= 1");
  const auto n = static_cast<double>(s.num_nodes());
  return (n - static_cast<double>(s.num_supernodes())) / n;
}

std::vector<NodeId> top_central_nodes(const NodeCentrality& c, double t_percent) {
  if (!(t_percent > 0.0 && t_percent <= 100.0)) {
    throw std::invalid_argument("top percent must lie in (0, 100]");
  }
  const std::size_t n = c.scores.size();
  const auto wanted = static_cast<std::size_t>(
      std::ceil(t_percent * static_cast<double>(n) / 100.0));
  const std::size_t take = std::min(wanted, n);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  auto more_central = [&](NodeId a, NodeId b) {
    return c.scores[a] != c.scores[b] ? c.scores[a] > c.scores[b] : a < b;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                    order.end(), more_central);
  order.resize(take);
  return order;
}

AppUtilityReport app_utility(const Summary& s, const NodeCentrality& c, double t_percent) {
  if (c.scores.size() != s.num_nodes()) {
    throw std::invalid_argument("centrality length does not match summary node count");
  }
  AppUtilityReport r;
  r.kind = c.kind;
  r.t_percent = t_percent;
  const auto top = top_central_nodes(c, t_percent);
  r.v_t_size = top.size();
  if (top.empty()) return r;
  double acc = 0.0;
  for (NodeId v : top) acc += 1.0 / static_cast<double>(s.size(s.supernode_of(v)));
  r.app_utility = acc / static_cast<double>(top.size());
  return r;
}

LosslessReport verify_lossless(const Graph& g, const Summary& s, std::uint64_t cap) {
  if (g.num_nodes() != s.num_nodes()) {
    throw std::invalid_argument("graph and summary disagree on node count");
  }
  const Graph rebuilt = reconstruct(s, cap);
  const auto original = g.edges();
  const auto restored = rebuilt.edges();

  LosslessReport r;
  auto note = [&](const NodePair& e, bool spurious) {
    (spurious ? r.spurious : r.lost) += 1;
    if (r.first_discrepancies.size() < 10) r.first_discrepancies.push_back({e, spurious});
  };
  std::size_t i = 0, j = 0;
  while (i < original.size() || j < restored.size()) {
    if (j == restored.size() || (i < original.size() && original[i] < restored[j])) {
      note(original[i++], false);
    } else if (i == original.size() || restored[j] < original[i]) {
      note(restored[j++], true);
    } else {
      ++i;
      ++j;
    }
  }
  r.lossless = r.lost == 0 && r.spurious == 0;
  return r;
}

void write_records(std::ostream& out, const MetaRecords& records) {
  for (const auto& [key, value] : records) out << key << ' ' << value << '\n';
}

void write_table(std::ostream& out, const MetaRecords& records) {
  std::size_t width = 0;
  for (const auto& rec : records) width = std::max(width, rec.first.size());
  for (const auto& [key, value] : records) {
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
}

MetaRecords to_records(const AppUtilityReport& r) {
  return {{"centrality", std::string(to_string(r.kind))},
          {"top_percent", format_real(r.t_percent)},
          {"v_t_size", std::to_string(r.v_t_size)},
          {"app_utility", format_real(r.app_utility)}};
}

MetaRecords to_records(const LosslessReport& r) {
  MetaRecords out{{"lossless", r.lossless ? "true" : "false"},
                  {"lost_edges", std::to_string(r.lost)},
                  {"spurious_edges", std::to_string(r.spurious)}};
  for (const auto& d : r.first_discrepancies) {
    out.emplace_back(d.spurious ? "spurious" : "lost",
                     std::to_string(d.edge.u) + " " + std::to_string(d.edge.v));
  }
  return out;
}

}  // namespace gsum
