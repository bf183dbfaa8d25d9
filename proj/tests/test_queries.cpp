#include <doctest.h>

#include <cmath>
#include <set>
#include <tuple>

#include "gsum/centrality.hpp"
#include "gsum/error.hpp"
#include "gsum/gscis.hpp"
#include "gsum/queries.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gsum;
using namespace gsum::testing;

namespace {

using K = SupernodeKind;
using Triple = std::tuple<NodeId, NodeId, NodeId>;

std::vector<Triple> collect(const Summary& s) {
  std::vector<Triple> out;
  enumerate_triangles(s, [&](NodeId a, NodeId b, NodeId c) { out.emplace_back(a, b, c); });
  return out;
}

// Number of vertices sharing a supernode with another vertex of the triple.
int triangle_type(const Summary& s, const Triple& t) {
  const auto [a, b, c] = t;
  const SupernodeId x = s.supernode_of(a), y = s.supernode_of(b), z = s.supernode_of(c);
  if (x == y && y == z) return 0;
  if (x == y || y == z || x == z) return 1;
  return 2;
}

Summary clique_pair_with_singleton() {
  return Summary({0, 0, 1}, {{0, 0}, {0, 1}}, std::vector<K>{K::clique, K::singleton});
}

}  // namespace

TEST_CASE("triangle counts by type") {
  const auto k4 = count_triangles(summarize(complete_graph(4)));
  CHECK(k4.count_a == 4);
  CHECK(k4.count_b == 0);
  CHECK(k4.count_c == 0);
  CHECK(k4.total == 4);

  const auto b = count_triangles(clique_pair_with_singleton());
  CHECK(b.count_a == 0);
  CHECK(b.count_b == 1);
  CHECK(b.total == 1);

  const auto star = count_triangles(summarize(star_graph(5)));
  CHECK(star.total == 0);
}

TEST_CASE("triangle counts match brute force") {
  const Graph g = erdos_renyi(300, 0.05, 11);
  CHECK(count_triangles(summarize(g)).total == brute_triangle_count(g));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph r = random_graph(seed, 200);
    const auto rep = count_triangles(summarize(r));
    REQUIRE(rep.total == brute_triangle_count(r));
    REQUIRE(rep.total == rep.count_a + rep.count_b + rep.count_c);
  }
}

TEST_CASE("triangle enumeration emits each triangle once, grouped by type") {
  {
    const auto k4 = collect(summarize(complete_graph(4)));
    CHECK(k4 == std::vector<Triple>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(collect(clique_pair_with_singleton()) == std::vector<Triple>{{0, 1, 2}});
  }
  const Graph g = erdos_renyi(300, 0.05, 11);
  const auto listed = collect(summarize(g));
  CHECK(std::set<Triple>(listed.begin(), listed.end()) == brute_triangles(g));
  CHECK(listed.size() == brute_triangles(g).size());

  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph r = random_graph(seed, 150);
    const Summary s = summarize(r);
    const auto tri = collect(s);
    const std::set<Triple> unique(tri.begin(), tri.end());
    REQUIRE(unique.size() == tri.size());
    REQUIRE(unique == brute_triangles(r));
    const auto rep = count_triangles(s);
    std::uint64_t by_type[3] = {0, 0, 0};
    int last = 0;
    for (const auto& t : tri) {
      const auto [a, b, c] = t;
      REQUIRE((a < b && b < c));
      const int type = triangle_type(s, t);
      REQUIRE(type >= last);
      last = type;
      ++by_type[type];
    }
    REQUIRE(by_type[0] == rep.count_a);
    REQUIRE(by_type[1] == rep.count_b);
    REQUIRE(by_type[2] == rep.count_c);
  }
}

TEST_CASE("summary pagerank on K4 and the star") {
  PagerankOptions opts;
  opts.damping = 1.0;
  const auto k4 = pagerank_on_summary(summarize(complete_graph(4)), opts);
  CHECK(k4.converged);
  for (double x : k4.node_scores) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));

  // Two-node system: c = 0.15 + 0.85 * 4 l, l = 0.15 + 0.85 c / 4.
  const auto star = pagerank_on_summary(summarize(star_graph(4)), {});
  const double c = 0.66 / 0.2775;
  CHECK(star.converged);
  CHECK(star.node_scores[0] == doctest::Approx(c).epsilon(1e-9));
  for (NodeId u = 1; u <= 4; ++u) {
    CHECK(star.node_scores[u] == star.node_scores[1]);
    CHECK(star.node_scores[u] == doctest::Approx(0.15 + 0.2125 * c).epsilon(1e-9));
  }
}

TEST_CASE("summary pagerank equals pagerank on the original graph") {
  const Graph g = erdos_renyi(200, 0.08, 4);
  const auto ps = pagerank_on_summary(summarize(g), {});
  const auto pg = pagerank(g, {});
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    CHECK(std::abs(ps.node_scores[u] - pg.scores[u]) < 1e-8);
  }
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph r = random_graph(seed, 200);
    const Summary s = summarize(r);
    for (double d : {1.0, 0.85}) {
      PagerankOptions opts;
      opts.damping = d;
      opts.max_iter = 5000;
      const auto sum_pr = pagerank_on_summary(s, opts);
      const Eigen::VectorXd ref = dense_pagerank(r, d, opts.tol, opts.max_iter);
      for (NodeId u = 0; u < r.num_nodes(); ++u) {
        REQUIRE(std::abs(sum_pr.node_scores[u] - ref(u)) < 1e-8);
      }
      for (SupernodeId x = 0; x < s.num_supernodes(); ++x) {
        const auto members = s.members(x);
        for (NodeId u : members) REQUIRE(sum_pr.node_scores[u] == sum_pr.node_scores[members[0]]);
      }
    }
  }
}

TEST_CASE("summary pagerank option checks") {
  PagerankOptions opts;
  opts.tol = -1.0;
  CHECK_THROWS_AS(pagerank_on_summary(summarize(star_graph(3)), opts), std::invalid_argument);
}

TEST_CASE("shortest paths on K4 and the star") {
  const Summary k4 = summarize(complete_graph(4));
  for (NodeId u = 0; u < 4; ++u) {
    for (NodeId v = 0; v < 4; ++v) CHECK(shortest_path_length(k4, u, v) == (u == v ? 0u : 1u));
  }
  const Summary star = summarize(star_graph(4));
  CHECK(shortest_path_length(star, 1, 2) == 2u);
  CHECK(shortest_path_length(star, 0, 3) == 1u);
  CHECK_THROWS_AS(shortest_path_length(star, 0, 5), std::out_of_range);

  // Isolated nodes form an IS supernode without neighbors.
  const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}};
  const Summary iso = summarize(Graph::from_edges(4, edges));
  CHECK_FALSE(shortest_path_length(iso, 2, 3).has_value());
  CHECK_FALSE(shortest_path_length(iso, 0, 2).has_value());
}

TEST_CASE("shortest paths equal BFS") {
  const Graph g = erdos_renyi(300, 0.03, 6);
  const Summary s = summarize(g);
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto u = static_cast<NodeId>(rng() % 300), v = static_cast<NodeId>(rng() % 300);
    const auto d = bfs_distances(g, u)[v];
    const auto got = shortest_path_length(s, u, v);
    REQUIRE(got.has_value() == (d >= 0));
    if (got) REQUIRE(*got == d);
  }
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph r = random_graph(seed, 80);
    const Summary rs = summarize(r);
    for (NodeId u = 0; u < r.num_nodes(); ++u) {
      const auto dist = bfs_distances(r, u);
      for (NodeId v = 0; v < r.num_nodes(); ++v) {
        const auto got = shortest_path_length(rs, u, v);
        REQUIRE(got.has_value() == (dist[v] >= 0));
        if (got) REQUIRE(*got == dist[v]);
      }
    }
  }
}

TEST_CASE("queries refuse lossy summaries") {
  const Summary lossy({0, 0, 1}, {{0, 1}});
  CHECK_THROWS_AS(count_triangles(lossy), UnsupportedSummary);
  CHECK_THROWS_AS(collect(lossy), UnsupportedSummary);
  CHECK_THROWS_AS(pagerank_on_summary(lossy), UnsupportedSummary);
  CHECK_THROWS_AS(shortest_path_length(lossy, 0, 1), UnsupportedSummary);
}
