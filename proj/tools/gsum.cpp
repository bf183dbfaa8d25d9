// gsum: command-line front end for lossless and lossy graph summarization,
// summary-native queries and evaluation metrics.
//
// Exit codes: 0 ok, 1 internal or I/O failure, 2 usage, 3 unsupported input,
// 4 resource cap exceeded.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsum/gsum.hpp"

namespace {

using namespace gsum;

enum Exit : int { kOk = 0, kInternal = 1, kUsage = 2, kUnsupported = 3, kCap = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string out;
  std::string summary_dir;
  double tau = 0.0;
  std::string centrality = "pagerank";
  double damping = 0.85;
  double tol = 1e-10;
  std::size_t max_iter = 200;
  std::uint64_t seed = 42;
  double top_percent = 20.0;
  std::string metric;
  std::string format = "records";
  std::size_t cap_betweenness = kDefaultBetweennessCap;
  std::uint64_t cap_reconstruction = kDefaultReconstructionCap;
  std::int64_t source_id = 0;
  std::int64_t target_id = 0;
};

CentralityKind centrality_kind(const RunConfig& cfg) {
  auto kind = parse_centrality_kind(cfg.centrality);
  if (!kind) throw UsageError("unknown centrality '" + cfg.centrality + "'");
  return *kind;
}

PagerankOptions pagerank_options(const RunConfig& cfg) {
  if (cfg.damping < 0.0 || cfg.damping > 1.0) throw UsageError("--damping must lie in [0,1]");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  return {cfg.damping, cfg.tol, cfg.max_iter};
}

void print_stats(const MetaRecords& stats) {
  bool first = true;
  for (const auto& [key, value] : stats) {
    std::cout << (first ? "" : " ") << key << '=' << value;
    first = false;
  }
  std::cout << '\n';
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_lossless(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto loaded = load_edge_list(cfg.input);
  const Graph& g = loaded.graph;
  const Summary s = summarize(g, cfg.seed);

  const MetaRecords meta{
      {"algorithm", "gscis"},
      {"n", std::to_string(g.num_nodes())},
      {"m", std::to_string(g.num_edges())},
      {"supernodes", std::to_string(s.num_supernodes())},
      {"superedges", std::to_string(s.num_superedges())},
      {"rn", g.num_nodes() ? format_real(reduction_in_nodes(s)) : "0"},
      {"seed", std::to_string(cfg.seed)},
      {"hash", "seeded-mix64"},
      {"self_loops_dropped", std::to_string(loaded.self_loops_dropped)},
      {"duplicates_dropped", std::to_string(loaded.duplicates_dropped)},
  };
  write_summary(cfg.out, s, meta, loaded.original_ids);

  MetaRecords stats(meta.begin(), meta.begin() + 6);
  stats.emplace_back("time_ms", format_real(elapsed_ms(start)));
  print_stats(stats);
  return kOk;
}

int cmd_lossy(const RunConfig& cfg) {
  if (!(cfg.tau > 0.0 && cfg.tau <= 1.0)) throw UsageError("--tau must lie in (0, 1]");
  const auto kind = centrality_kind(cfg);
  const auto options = pagerank_options(cfg);

  const auto start = std::chrono::steady_clock::now();
  const auto loaded = load_edge_list(cfg.input);
  const Graph& g = loaded.graph;
  if (g.num_nodes() == 0) throw ModelUndefined("empty graph has no weight model");
  const std::uint64_t n = g.num_nodes();
  if (n * (n - 1) / 2 <= g.num_edges()) {
    throw ModelUndefined("complete graph: no spurious edge exists, utility model undefined");
  }

  auto centrality = compute_centrality(g, kind, options, cfg.cap_betweenness);
  const bool converged = centrality.converged;
  const auto iterations = centrality.iterations;
  const EdgeWeightModel model(g, std::move(centrality));
  const auto result = summarize_lossy(g, model, cfg.tau);

  const MetaRecords meta{
      {"algorithm", "tbuds"},
      {"n", std::to_string(g.num_nodes())},
      {"m", std::to_string(g.num_edges())},
      {"supernodes", std::to_string(result.summary.num_supernodes())},
      {"superedges", std::to_string(result.summary.num_superedges())},
      {"rn", format_real(reduction_in_nodes(result.summary))},
      {"tau", format_real(cfg.tau)},
      {"utility", format_real(result.utility)},
      {"prefix_length", std::to_string(result.prefix_length)},
      {"merge_pairs", std::to_string(result.pair_count)},
      {"centrality", cfg.centrality},
      {"damping", format_real(cfg.damping)},
      {"tol", format_real(cfg.tol)},
      {"max_iter", std::to_string(cfg.max_iter)},
      {"centrality_iterations", std::to_string(iterations)},
      {"centrality_converged", converged ? "true" : "false"},
      {"tie_break", "weight,min_id,max_id"},
      {"seed", std::to_string(cfg.seed)},
  };
  write_summary(cfg.out, result.summary, meta, loaded.original_ids);

  MetaRecords stats(meta.begin(), meta.begin() + 9);
  stats.emplace_back("time_ms", format_real(elapsed_ms(start)));
  print_stats(stats);
  return kOk;
}

// External id of node u (identity when the summary carries no id table).
std::int64_t external_id(const SummaryFiles& files, NodeId u) {
  return files.original_ids.empty() ? static_cast<std::int64_t>(u) : files.original_ids[u];
}

NodeId internal_id(const SummaryFiles& files, std::int64_t id) {
  if (files.original_ids.empty()) {
    if (id < 0 || static_cast<std::uint64_t>(id) >= files.summary.num_nodes()) {
      throw UsageError("node " + std::to_string(id) + " not in summary");
    }
    return static_cast<NodeId>(id);
  }
  for (NodeId u = 0; u < files.original_ids.size(); ++u) {
    if (files.original_ids[u] == id) return u;
  }
  throw UsageError("node " + std::to_string(id) + " not in summary");
}

SummaryFiles load_summary_dir(const std::string& dir) {
  try {
    return read_summary(dir);
  } catch (const std::invalid_argument& e) {
    throw UnsupportedSummary(std::string("inconsistent summary: ") + e.what());
  }
}

int cmd_query_triangles(const RunConfig& cfg) {
  const auto files = load_summary_dir(cfg.summary_dir);
  const auto r = count_triangles(files.summary);
  std::cout << r.count_a << ' ' << r.count_b << ' ' << r.count_c << ' ' << r.total << '\n';
  return kOk;
}

int cmd_query_pagerank(const RunConfig& cfg) {
  const auto options = pagerank_options(cfg);
  const auto files = load_summary_dir(cfg.summary_dir);
  const auto r = pagerank_on_summary(files.summary, options);
  for (NodeId u = 0; u < r.node_scores.size(); ++u) {
    std::cout << external_id(files, u) << ' ' << format_real(r.node_scores[u]) << '\n';
  }
  if (!r.converged) std::cerr << "warning: pagerank did not converge\n";
  return kOk;
}

int cmd_query_sssp(const RunConfig& cfg) {
  const auto files = load_summary_dir(cfg.summary_dir);
  if (!files.summary.is_lossless()) throw UnsupportedSummary("sssp needs a lossless summary");
  const NodeId u = internal_id(files, cfg.source_id);
  const NodeId v = internal_id(files, cfg.target_id);
  const auto d = shortest_path_length(files.summary, u, v);
  std::cout << cfg.source_id << ' ' << cfg.target_id << ' '
            << (d ? std::to_string(*d) : std::string("inf")) << '\n';
  return kOk;
}

int cmd_eval(const RunConfig& cfg) {
  const auto files = load_summary_dir(cfg.summary_dir);
  const Summary& s = files.summary;

  auto emit = [&](const MetaRecords& records) {
    if (cfg.format == "table") {
      write_table(std::cout, records);
    } else {
      write_records(std::cout, records);
    }
  };

  if (cfg.metric == "rn") {
    emit({{"supernodes", std::to_string(s.num_supernodes())},
          {"n", std::to_string(s.num_nodes())},
          {"rn", format_real(reduction_in_nodes(s))}});
    return kOk;
  }

  if (cfg.input.empty()) throw UsageError("--input graph required for metric " + cfg.metric);
  const auto loaded = load_edge_list(cfg.input);
  if (loaded.graph.num_nodes() != s.num_nodes() ||
      (!files.original_ids.empty() && files.original_ids != loaded.original_ids)) {
    throw UnsupportedSummary("graph does not match the summary's node set");
  }

  if (cfg.metric == "app-utility") {
    const auto kind = centrality_kind(cfg);
    const auto c = compute_centrality(loaded.graph, kind, pagerank_options(cfg), cfg.cap_betweenness);
    emit(to_records(app_utility(s, c, cfg.top_percent)));
    return kOk;
  }
  const auto report = verify_lossless(loaded.graph, s, cfg.cap_reconstruction);
  MetaRecords records = to_records(report);
  if (!files.original_ids.empty()) {
    for (std::size_t i = 3; i < records.size(); ++i) {
      const auto& e = report.first_discrepancies[i - 3].edge;
      records[i].second = std::to_string(files.original_ids[e.u]) + " " +
                          std::to_string(files.original_ids[e.v]);
    }
  }
  emit(records);
  return report.lossless ? kOk : kInternal;
}

int run(int argc, char** argv) {
  CLI::App app{"Graph summarization toolkit: lossless (clique / independent set) and "
               "utility-driven lossy summaries, summary-native queries, evaluation."};
  app.require_subcommand(1);
  RunConfig cfg;

  std::vector<CLI::Option*> max_iter_flags;
  auto add_pagerank_flags = [&](CLI::App* cmd) {
    cmd->add_option("--damping", cfg.damping, "Pagerank damping factor")->capture_default_str();
    cmd->add_option("--tol", cfg.tol, "Power-iteration L1 tolerance")->capture_default_str();
    max_iter_flags.push_back(
        cmd->add_option("--max-iter", cfg.max_iter,
                        "Power-iteration cap (eigenvector defaults to 10000)")
            ->capture_default_str());
  };
  const std::vector<std::string> kinds{"uniform", "pagerank", "degree", "eigenvector",
                                       "betweenness"};

  auto* lossless = app.add_subcommand("lossless", "Optimal lossless summary");
  lossless->add_option("--input", cfg.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  lossless->add_option("--out", cfg.out, "Output summary directory")->required();
  lossless->add_option("--seed", cfg.seed, "Hash seed")->capture_default_str();

  auto* lossy = app.add_subcommand("lossy", "Utility-threshold lossy summary");
  lossy->add_option("--input", cfg.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  lossy->add_option("--out", cfg.out, "Output summary directory")->required();
  lossy->add_option("--tau", cfg.tau, "Utility threshold in (0,1]")->required();
  lossy->add_option("--centrality", cfg.centrality, "Node centrality for edge weights")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  add_pagerank_flags(lossy);
  lossy->add_option("--seed", cfg.seed, "Recorded seed")->capture_default_str();
  lossy->add_option("--cap-betweenness", cfg.cap_betweenness, "Max n for exact betweenness")
      ->capture_default_str();

  auto* query = app.add_subcommand("query", "Query a lossless summary without reconstruction");
  query->require_subcommand(1);
  query->add_option("--summary,--input", cfg.summary_dir, "Summary directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  auto* triangles = query->add_subcommand("triangles", "Print \"a b c total\" triangle counts");
  auto* pr = query->add_subcommand("pagerank", "Print \"node_id score\" lines");
  add_pagerank_flags(pr);
  auto* sssp = query->add_subcommand("sssp", "Print \"u v d\" hop distance");
  sssp->add_option("u", cfg.source_id, "Source node id")->required();
  sssp->add_option("v", cfg.target_id, "Target node id")->required();

  auto* eval = app.add_subcommand("eval", "Evaluation metrics for a summary");
  eval->add_option("--summary", cfg.summary_dir, "Summary directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  eval->add_option("--input", cfg.input, "Original edge-list file")->check(CLI::ExistingFile);
  eval->add_option("--metric", cfg.metric, "rn | app-utility | verify-lossless")
      ->required()
      ->check(CLI::IsMember({"rn", "app-utility", "verify-lossless"}));
  eval->add_option("--top-percent", cfg.top_percent, "t for top-t% queries")->capture_default_str();
  eval->add_option("--centrality", cfg.centrality, "Centrality ranking top nodes")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  add_pagerank_flags(eval);
  eval->add_option("--format", cfg.format, "records | table")
      ->check(CLI::IsMember({"records", "table"}))
      ->capture_default_str();
  eval->add_option("--cap-betweenness", cfg.cap_betweenness, "Max n for exact betweenness")
      ->capture_default_str();
  eval->add_option("--cap-reconstruction", cfg.cap_reconstruction,
                   "Max edges a reconstruction may emit")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (cfg.centrality == "eigenvector" &&
      std::none_of(max_iter_flags.begin(), max_iter_flags.end(),
                   [](const CLI::Option* o) { return o->count() > 0; })) {
    cfg.max_iter = 10000;
  }

  try {
    if (*lossless) return cmd_lossless(cfg);
    if (*lossy) return cmd_lossy(cfg);
    if (*query) {
      if (*triangles) return cmd_query_triangles(cfg);
      if (*pr) return cmd_query_pagerank(cfg);
      if (*sssp) return cmd_query_sssp(cfg);
    }
    if (*eval) {
      if (cfg.metric == "app-utility" && !(cfg.top_percent > 0.0 && cfg.top_percent <= 100.0)) {
        throw UsageError("--top-percent must lie in (0, 100]");
      }
      return cmd_eval(cfg);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "unsupported input: " << e.what() << '\n';
    return kUnsupported;
  } catch (const UnsupportedSummary& e) {
    std::cerr << "unsupported summary: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ModelUndefined& e) {
    std::cerr << "unsupported input: " << e.what() << '\n';
    return kUnsupported;
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
