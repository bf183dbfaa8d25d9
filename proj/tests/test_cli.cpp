#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "gsum/centrality.hpp"
#include "gsum/eval.hpp"
#include "gsum/gscis.hpp"
#include "gsum/graph.hpp"
#include "gsum/queries.hpp"
#include "gsum/summary.hpp"
#include "gsum/tbuds.hpp"
#include "support/generators.hpp"

using namespace gsum;
using namespace gsum::testing;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run gsum_cli(const std::string& args) {
  const std::string cmd = std::string(GSUM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("gsum_test_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string fixture(const std::string& name) { return std::string(GSUM_FIXTURE_DIR) + "/" + name; }

std::map<std::string, std::string> read_meta(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : read_summary(dir).meta) out[k] = v;
  return out;
}

std::map<std::string, std::string> parse_stats(const std::string& line) {
  std::map<std::string, std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

std::map<std::string, std::string> parse_records(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string key, value;
  while (in >> key && std::getline(in >> std::ws, value)) out[key] = value;
  return out;
}

fs::path write_graph(const Graph& g, const std::string& name) {
  const auto p = scratch(name);
  write_edge_list(g, p);
  return p;
}

}  // namespace

TEST_CASE("lossless on K4 and the star") {
  const auto k4 = scratch("k4");
  const Run r = gsum_cli("lossless --input " + fixture("k4.txt") + " --out " + k4.string());
  REQUIRE(r.code == 0);
  CHECK(read_meta(k4)["supernodes"] == "1");
  const auto stats = parse_stats(r.out);
  CHECK(stats.at("supernodes") == "1");
  CHECK(stats.at("n") == "4");
  CHECK(stats.at("m") == "6");
  CHECK(stats.count("time_ms") == 1);

  const auto star = scratch("star");
  REQUIRE(gsum_cli("lossless --input " + fixture("star.txt") + " --out " + star.string()).code == 0);
  CHECK(read_meta(star)["supernodes"] == "2");
  CHECK(read_summary(star).original_ids == std::vector<std::int64_t>{10, 11, 12, 13, 14});

  CHECK(gsum_cli("query --summary " + k4.string() + " triangles").out == "4 0 0 4\n");
  CHECK(gsum_cli("query --summary " + star.string() + " sssp 11 12").out == "11 12 2\n");
  CHECK(gsum_cli("query --summary " + star.string() + " sssp 10 14").out == "10 14 1\n");
  CHECK(gsum_cli("query --summary " + star.string() + " sssp 10 99").code == 2);
}

TEST_CASE("lossless RN matches the library") {
  const Graph g = with_twins(erdos_renyi(80, 0.08, 3), 0.5, 3);
  const auto input = write_graph(g, "random.txt");
  const auto out = scratch("random_summary");
  REQUIRE(gsum_cli("lossless --input " + input.string() + " --out " + out.string()).code == 0);
  const auto loaded = load_edge_list(input);
  const Summary lib = summarize(loaded.graph);
  CHECK(read_summary(out).summary == lib);
  CHECK(read_meta(out)["rn"] == format_real(reduction_in_nodes(lib)));

  const Run rn = gsum_cli("eval --summary " + out.string() + " --metric rn");
  REQUIRE(rn.code == 0);
  CHECK(parse_records(rn.out).at("rn") == format_real(reduction_in_nodes(lib)));

  const Run verify =
      gsum_cli("eval --summary " + out.string() + " --input " + input.string() +
               " --metric verify-lossless");
  CHECK(verify.code == 0);
  CHECK(parse_records(verify.out).at("lossless") == "true");
}

TEST_CASE("lossy on the worked example and at tau 1") {
  const auto out = scratch("lossy85");
  REQUIRE(gsum_cli("lossy --input " + fixture("utility_example.txt") + " --out " + out.string() +
                   " --tau 0.85 --centrality uniform")
              .code == 0);
  auto meta = read_meta(out);
  CHECK(std::stod(meta["utility"]) >= 0.85);
  CHECK(meta["tau"] == "0.85");
  CHECK(meta["centrality"] == "uniform");
  CHECK_FALSE(fs::exists(out / "kinds.txt"));

  const auto full = scratch("lossy1");
  REQUIRE(gsum_cli("lossy --input " + fixture("utility_example.txt") + " --out " +
                   full.string() + " --tau 1")
              .code == 0);
  CHECK(read_meta(full)["utility"] == "1");

  // Lossy summaries are refused by the lossless-only queries.
  CHECK(gsum_cli("query --summary " + out.string() + " triangles").code == 3);
  CHECK(gsum_cli("query --summary " + out.string() + " pagerank").code == 3);
  CHECK(gsum_cli("query --summary " + out.string() + " sssp 0 1").code == 3);
}

TEST_CASE("lossy prefix length matches a linear scan") {
  const Graph g = erdos_renyi(60, 0.12, 21);
  const auto input = write_graph(g, "er.txt");
  const auto out = scratch("er_lossy");
  REQUIRE(gsum_cli("lossy --input " + input.string() + " --out " + out.string() + " --tau 0.8")
              .code == 0);
  const auto loaded = load_edge_list(input);
  const EdgeWeightModel model(loaded.graph, pagerank(loaded.graph));
  const auto h = two_hop_mst(loaded.graph, model.centrality().scores);
  std::size_t best = 0;
  for (std::size_t t = 0; t <= h.size(); ++t) {
    if (compute_utility(loaded.graph, model, merge_prefix(loaded.graph.num_nodes(), h, t)) >= 0.8) {
      best = t;
    }
  }
  CHECK(read_meta(out)["prefix_length"] == std::to_string(best));
}

TEST_CASE("pagerank query matches the library") {
  const Graph g = erdos_renyi(50, 0.1, 5);
  const auto input = write_graph(g, "pr.txt");
  const auto out = scratch("pr_summary");
  REQUIRE(gsum_cli("lossless --input " + input.string() + " --out " + out.string()).code == 0);
  const auto files = read_summary(out);
  const auto lib = pagerank_on_summary(files.summary, {});
  std::ostringstream expected;
  for (NodeId u = 0; u < files.summary.num_nodes(); ++u) {
    expected << files.original_ids[u] << ' ' << format_real(lib.node_scores[u]) << '\n';
  }
  CHECK(gsum_cli("query --summary " + out.string() + " pagerank").out == expected.str());
}

TEST_CASE("eval app-utility and corrupted summaries") {
  const Graph g = erdos_renyi(40, 0.15, 8);
  const auto input = write_graph(g, "app.txt");
  const auto out = scratch("app_lossy");
  REQUIRE(gsum_cli("lossy --input " + input.string() + " --out " + out.string() + " --tau 0.7")
              .code == 0);
  const Run app = gsum_cli("eval --summary " + out.string() + " --input " + input.string() +
                           " --metric app-utility --top-percent 20 --centrality degree");
  REQUIRE(app.code == 0);
  const auto rec = parse_records(app.out);
  const auto loaded = load_edge_list(input);
  const auto lib = app_utility(read_summary(out).summary, degree_centrality(loaded.graph), 20);
  CHECK(rec.at("app_utility") == format_real(lib.app_utility));
  CHECK(rec.at("v_t_size") == "8");

  const Run table = gsum_cli("eval --summary " + out.string() + " --metric rn --format table");
  CHECK(table.out.find("rn  ") != std::string::npos);

  // Swap two nodes between supernodes to break a lossless summary.
  const auto lossless = scratch("corrupt");
  const Graph star = star_graph(4);
  const auto sinput = write_graph(star, "corrupt.txt");
  REQUIRE(gsum_cli("lossless --input " + sinput.string() + " --out " + lossless.string()).code == 0);
  {
    std::ofstream m(lossless / "membership.txt");
    m << "0 0\n1 1\n2 1\n3 1\n4 0\n";
    std::ofstream k(lossless / "kinds.txt");
    k << "0 independent_set\n1 independent_set\n";
  }
  const Run bad = gsum_cli("eval --summary " + lossless.string() + " --input " + sinput.string() +
                           " --metric verify-lossless");
  CHECK(bad.code == 1);
  CHECK(parse_records(bad.out).at("lossless") == "false");
  CHECK(gsum_cli("eval --summary " + lossless.string() + " --input " + sinput.string() +
                 " --metric verify-lossless --cap-reconstruction 2")
            .code == 4);
}

TEST_CASE("exit codes for bad input") {
  const auto out = scratch("errors");
  CHECK(gsum_cli("").code == 2);
  CHECK(gsum_cli("lossless --input /nonexistent.txt --out " + out.string()).code == 2);
  CHECK(gsum_cli("lossy --input " + fixture("star.txt") + " --out " + out.string() + " --tau 1.5")
            .code == 2);
  CHECK(gsum_cli("lossy --input " + fixture("star.txt") + " --out " + out.string() + " --tau 0")
            .code == 2);
  CHECK(gsum_cli("lossy --input " + fixture("star.txt") + " --out " + out.string() +
                 " --tau 0.5 --centrality katz")
            .code == 2);
  CHECK(gsum_cli("lossy --input " + fixture("k4.txt") + " --out " + out.string() + " --tau 0.5")
            .code == 3);
  CHECK(gsum_cli("lossy --input " + fixture("star.txt") + " --out " + out.string() +
                 " --tau 0.5 --centrality betweenness --cap-betweenness 2")
            .code == 4);

  const auto bad = scratch("bad.txt");
  {
    std::ofstream f(bad);
    f << "0 1\n1 banana\n";
  }
  CHECK(gsum_cli("lossless --input " + bad.string() + " --out " + out.string()).code == 3);
  CHECK(gsum_cli("eval --summary " + out.string() + " --metric rn").code == 2);
  CHECK(gsum_cli("--help").code == 0);
}

TEST_CASE("identical runs produce identical directories") {
  const Graph g = barabasi_albert(120, 2, 4);
  const auto input = write_graph(g, "det.txt");
  auto slurp_dir = [](const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      std::ifstream in(entry.path(), std::ios::binary);
      std::ostringstream s;
      s << in.rdbuf();
      files[entry.path().filename().string()] = s.str();
    }
    return files;
  };
  for (const std::string cmd : {"lossless", "lossy --tau 0.75"}) {
    const auto a = scratch("det_a"), b = scratch("det_b");
    REQUIRE(gsum_cli(cmd + " --input " + input.string() + " --out " + a.string()).code == 0);
    REQUIRE(gsum_cli(cmd + " --input " + input.string() + " --out " + b.string()).code == 0);
    CHECK(slurp_dir(a) == slurp_dir(b));
  }
}
