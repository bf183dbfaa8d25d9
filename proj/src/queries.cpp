#include "gsum/queries.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "gsum/error.hpp"

namespace gsum {

namespace {

void require_lossless(const Summary& s) {
  if (!s.is_lossless()) {
    throw UnsupportedSummary("query needs a lossless summary with supernode kinds");
  }
}

std::uint64_t choose2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }
std::uint64_t choose3(std::uint64_t k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; }

// Forward orientation of the summary graph without self-loops, ranked by
// (degree, id). Each super-triangle X,Y,Z is reported once.
template <class F>
void for_each_super_triangle(const Summary& s, F&& f) {
  const std::size_t k = s.num_supernodes();
  std::vector<std::size_t> degree(k);
  for (SupernodeId x = 0; x < k; ++x) {
    degree[x] = s.super_neighbors(x).size() - (s.has_self_loop(x) ? 1 : 0);
  }
  auto before = [&](SupernodeId a, SupernodeId b) {
    return degree[a] != degree[b] ? degree[a] < degree[b] : a < b;
  };
  std::vector<std::vector<SupernodeId>> out(k);
  for (SupernodeId x = 0; x < k; ++x) {
    for (SupernodeId y : s.super_neighbors(x)) {
      if (y != x && before(x, y)) out[x].push_back(y);
    }
  }
  std::vector<SupernodeId> common;
  for (SupernodeId x = 0; x < k; ++x) {
    for (SupernodeId y : out[x]) {
      common.clear();
      std::set_intersection(out[x].begin(), out[x].end(), out[y].begin(), out[y].end(),
                            std::back_inserter(common));
      for (SupernodeId z : common) {
        SupernodeId t[3] = {x, y, z};
        std::sort(t, t + 3);
        f(t[0], t[1], t[2]);
      }
    }
  }
}

void emit_sorted(const TriangleSink& sink, NodeId a, NodeId b, NodeId c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  sink(a, b, c);
}

}  // namespace

TriangleReport count_triangles(const Summary& s) {
  require_lossless(s);
  TriangleReport r;
  for (SupernodeId x = 0; x < s.num_supernodes(); ++x) {
    if (s.kind(x) != SupernodeKind::clique) continue;
    const std::uint64_t size = s.size(x);
    r.count_a += choose3(size);
    for (SupernodeId y : s.super_neighbors(x)) {
      if (y != x) r.count_b += choose2(size) * s.size(y);
    }
  }
  for_each_super_triangle(s, [&](SupernodeId x, SupernodeId y, SupernodeId z) {
    r.count_c += std::uint64_t{s.size(x)} * s.size(y) * s.size(z);
  });
  r.total = r.count_a + r.count_b + r.count_c;
  return r;
}

void enumerate_triangles(const Summary& s, const TriangleSink& sink) {
  require_lossless(s);
  const std::size_t k = s.num_supernodes();
  for (SupernodeId x = 0; x < k; ++x) {
    if (s.kind(x) != SupernodeKind::clique) continue;
    const auto m = s.members(x);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        for (std::size_t l = j + 1; l < m.size(); ++l) sink(m[i], m[j], m[l]);
      }
    }
  }
  for (SupernodeId x = 0; x < k; ++x) {
    if (s.kind(x) != SupernodeKind::clique) continue;
    const auto m = s.members(x);
    for (SupernodeId y : s.super_neighbors(x)) {
      if (y == x) continue;
      const auto other = s.members(y);
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
          for (NodeId w : other) emit_sorted(sink, m[i], m[j], w);
        }
      }
    }
  }
  std::vector<std::array<SupernodeId, 3>> triangles;
  for_each_super_triangle(s, [&](SupernodeId x, SupernodeId y, SupernodeId z) {
    triangles.push_back({x, y, z});
  });
  std::sort(triangles.begin(), triangles.end());
  for (const auto& [x, y, z] : triangles) {
    for (NodeId a : s.members(x)) {
      for (NodeId b : s.members(y)) {
        for (NodeId c : s.members(z)) emit_sorted(sink, a, b, c);
      }
    }
  }
}

SummaryPagerank pagerank_on_summary(const Summary& s, const PagerankOptions& options) {
  require_lossless(s);
  if (!(options.tol > 0.0)) throw std::invalid_argument("pagerank tol must be positive");
  if (options.damping < 0.0 || options.damping > 1.0) {
    throw std::invalid_argument("pagerank damping must lie in [0,1]");
  }
  const std::size_t k = s.num_supernodes();
  const double d = options.damping;

  std::vector<double> size(k);
  std::vector<double> degree(k);  // degree in G of any member
  std::vector<char> clique(k);
  for (SupernodeId x = 0; x < k; ++x) {
    size[x] = static_cast<double>(s.size(x));
    clique[x] = s.kind(x) == SupernodeKind::clique;
    double w = clique[x] ? size[x] - 1.0 : 0.0;
    for (SupernodeId y : s.super_neighbors(x)) {
      if (y != x) w += static_cast<double>(s.size(y));
    }
    degree[x] = w;
  }

  SummaryPagerank result;
  result.supernode_scores = size;
  auto& rank = result.supernode_scores;
  std::vector<double> share(k);
  std::vector<double> next(k);
  while (result.iterations < options.max_iter) {
    for (SupernodeId y = 0; y < k; ++y) share[y] = degree[y] == 0.0 ? 0.0 : rank[y] / degree[y];
    double change = 0.0;
    for (SupernodeId x = 0; x < k; ++x) {
      double acc = 0.0;
      for (SupernodeId y : s.super_neighbors(x)) {
        if (y != x) acc += share[y];
      }
      acc *= size[x];
      if (clique[x]) acc += (size[x] - 1.0) * share[x];
      next[x] = (1.0 - d) * size[x] + d * acc;
      change += std::abs(next[x] - rank[x]);
    }
    rank.swap(next);
    ++result.iterations;
    if (change < options.tol) {
      result.converged = true;
      break;
    }
  }

  result.node_scores.resize(s.num_nodes());
  for (NodeId u = 0; u < s.num_nodes(); ++u) {
    const auto x = s.supernode_of(u);
    result.node_scores[u] = rank[x] / size[x];
  }
  return result;
}

std::optional<std::uint32_t> shortest_path_length(const Summary& s, NodeId u, NodeId v) {
  require_lossless(s);
  if (u >= s.num_nodes() || v >= s.num_nodes()) throw std::out_of_range("node id out of range");
  if (u == v) return 0;
  const SupernodeId su = s.supernode_of(u);
  const SupernodeId sv = s.supernode_of(v);
  if (su == sv) {
    if (s.kind(su) == SupernodeKind::clique) return 1;
    if (!s.super_neighbors(su).empty()) return 2;
    return std::nullopt;
  }
  std::vector<std::int64_t> dist(s.num_supernodes(), -1);
  std::vector<SupernodeId> queue{su};
  dist[su] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const SupernodeId x = queue[head];
    for (SupernodeId y : s.super_neighbors(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (y == sv) return static_cast<std::uint32_t>(dist[y]);
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

}  // namespace gsum
