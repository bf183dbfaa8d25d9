#include "gsum/summary.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gsum/error.hpp"

namespace gsum {

std::string_view to_string(SupernodeKind kind) {
  switch (kind) {
    case SupernodeKind::singleton: return "singleton";
    case SupernodeKind::clique: return "clique";
    case SupernodeKind::independent_set: return "independent_set";
  }
  return "unknown";
}

std::optional<SupernodeKind> parse_supernode_kind(std::string_view name) {
  for (auto kind :
       {SupernodeKind::singleton, SupernodeKind::clique, SupernodeKind::independent_set}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

template <class Label>
std::vector<SupernodeId> relabel(std::span<const Label> labels) {
  constexpr SupernodeId kUnset = static_cast<SupernodeId>(-1);
  std::vector<SupernodeId> out(labels.size());
  const Label top = labels.empty() ? Label{0} : *std::max_element(labels.begin(), labels.end());
  SupernodeId next = 0;
  if (top < 4 * labels.size() + 16) {
    std::vector<SupernodeId> ids(static_cast<std::size_t>(top) + 1, kUnset);
    for (std::size_t u = 0; u < labels.size(); ++u) {
      auto& id = ids[static_cast<std::size_t>(labels[u])];
      if (id == kUnset) id = next++;
      out[u] = id;
    }
    return out;
  }
  std::unordered_map<Label, SupernodeId> ids;
  ids.reserve(labels.size());
  for (std::size_t u = 0; u < labels.size(); ++u) {
    auto [it, inserted] = ids.try_emplace(labels[u], next);
    if (inserted) ++next;
    out[u] = it->second;
  }
  return out;
}

}  // namespace

std::vector<SupernodeId> canonical_membership(std::span<const std::uint64_t> labels) {
  return relabel(labels);
}

std::vector<SupernodeId> canonical_membership(std::span<const SupernodeId> labels) {
  return relabel(labels);
}

Summary::Summary(std::vector<SupernodeId> membership, std::vector<Superedge> superedges,
                 std::optional<std::vector<SupernodeKind>> kinds)
    : membership_(std::move(membership)), kinds_(std::move(kinds)) {
  std::size_t k = 0;
  for (SupernodeId s : membership_) k = std::max<std::size_t>(k, std::size_t{s} + 1);

  member_offsets_.assign(k + 1, 0);
  for (SupernodeId s : membership_) ++member_offsets_[s + 1];
  for (std::size_t s = 0; s < k; ++s) {
    if (member_offsets_[s + 1] == 0) {
      throw std::invalid_argument("supernode ids must be dense: id " + std::to_string(s) +
                                  " is empty");
    }
    member_offsets_[s + 1] += member_offsets_[s];
  }
  members_.resize(membership_.size());
  {
    std::vector<std::size_t> cursor(member_offsets_.begin(), member_offsets_.end() - 1);
    for (NodeId u = 0; u < membership_.size(); ++u) members_[cursor[membership_[u]]++] = u;
  }

  for (auto& e : superedges) {
    if (e.a >= k || e.b >= k) throw std::invalid_argument("superedge endpoint out of range");
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  if (!std::is_sorted(superedges.begin(), superedges.end())) {
    std::sort(superedges.begin(), superedges.end());
  }
  superedges.erase(std::unique(superedges.begin(), superedges.end()), superedges.end());
  superedges_ = std::move(superedges);

  adj_offsets_.assign(k + 1, 0);
  for (const auto& e : superedges_) {
    ++adj_offsets_[e.a + 1];
    if (e.a != e.b) ++adj_offsets_[e.b + 1];
  }
  for (std::size_t s = 0; s < k; ++s) adj_offsets_[s + 1] += adj_offsets_[s];
  adjacency_.resize(adj_offsets_[k]);
  {
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const auto& e : superedges_) {
      adjacency_[cursor[e.a]++] = e.b;
      if (e.a != e.b) adjacency_[cursor[e.b]++] = e.a;
    }
    // Filling in sorted superedge order already leaves each list ascending.
    for (std::size_t s = 0; s < k; ++s) {
      const auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[s]);
      const auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[s + 1]);
      if (!std::is_sorted(first, last)) std::sort(first, last);
    }
  }

  if (kinds_) {
    if (kinds_->size() != k) throw std::invalid_argument("one kind tag per supernode required");
    for (SupernodeId s = 0; s < k; ++s) {
      const auto sz = size(s);
      const bool loop = has_self_loop(s);
      switch ((*kinds_)[s]) {
        case SupernodeKind::singleton:
          if (sz != 1) throw std::invalid_argument("singleton supernode with several members");
          if (loop) throw std::invalid_argument("singleton supernode with a self-loop");
          break;
        case SupernodeKind::clique:
          if (sz < 2) throw std::invalid_argument("clique supernode needs at least two members");
          if (!loop) throw std::invalid_argument("clique supernode without self-loop");
          break;
        case SupernodeKind::independent_set:
          if (sz < 2) throw std::invalid_argument("independent set needs at least two members");
          if (loop) throw std::invalid_argument("independent set supernode with a self-loop");
          break;
      }
    }
  }
}

std::span<const NodeId> Summary::members(SupernodeId s) const {
  if (s >= num_supernodes()) throw std::out_of_range("supernode id out of range");
  return {members_.data() + member_offsets_[s], member_offsets_[s + 1] - member_offsets_[s]};
}

std::span<const SupernodeId> Summary::super_neighbors(SupernodeId s) const {
  if (s >= num_supernodes()) throw std::out_of_range("supernode id out of range");
  return {adjacency_.data() + adj_offsets_[s], adj_offsets_[s + 1] - adj_offsets_[s]};
}

bool Summary::has_self_loop(SupernodeId s) const {
  const auto nb = super_neighbors(s);
  return std::binary_search(nb.begin(), nb.end(), s);
}

SupernodeKind Summary::kind(SupernodeId s) const {
  if (!kinds_) throw UnsupportedSummary("summary carries no supernode kinds (lossy summary)");
  return kinds_->at(s);
}

std::uint64_t reconstructed_edge_count(const Summary& s) {
  std::uint64_t total = 0;
  for (const auto& e : s.superedges()) {
    const std::uint64_t a = s.size(e.a);
    if (e.a == e.b) {
      total += a * (a - 1) / 2;
    } else {
      total += a * s.size(e.b);
    }
  }
  return total;
}

Graph reconstruct(const Summary& s, std::uint64_t cap) {
  const auto implied = reconstructed_edge_count(s);
  if (implied > cap) {
    throw CapExceeded("reconstruction would emit " + std::to_string(implied) +
                      " edges, above cap " + std::to_string(cap));
  }
  std::vector<NodePair> edges;
  edges.reserve(implied);
  for (const auto& e : s.superedges()) {
    const auto left = s.members(e.a);
    if (e.a == e.b) {
      for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = i + 1; j < left.size(); ++j) edges.emplace_back(left[i], left[j]);
      }
    } else {
      for (NodeId x : left) {
        for (NodeId y : s.members(e.b)) edges.emplace_back(x, y);
      }
    }
  }
  return Graph::from_edges(s.num_nodes(), edges);
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw IoError("cannot open " + p.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& p) {
  out.flush();
  if (!out) throw IoError("write failure on " + p.string());
}

// Reads whitespace-separated records of `fields` tokens per non-empty line.
std::vector<std::vector<std::string>> read_records(const std::filesystem::path& p,
                                                   std::size_t fields) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot open " + p.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string tok;
    while (ls >> tok) row.push_back(tok);
    if (row.empty()) continue;
    if (fields != 0 && row.size() != fields) {
      throw ParseError(p.filename().string() + ": expected " + std::to_string(fields) +
                           " fields",
                       lineno);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
T parse_int(const std::string& tok, std::size_t lineno, const std::string& file) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(file + ": bad integer '" + tok + "'", lineno);
  }
  return value;
}

}  // namespace

void write_summary(const std::filesystem::path& dir, const Summary& s, const MetaRecords& meta,
                   std::span<const std::int64_t> original_ids) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  {
    const auto p = dir / "membership.txt";
    auto out = open_out(p);
    for (NodeId u = 0; u < s.num_nodes(); ++u) out << u << ' ' << s.supernode_of(u) << '\n';
    finish(out, p);
  }
  {
    const auto p = dir / "superedges.txt";
    auto out = open_out(p);
    for (const auto& e : s.superedges()) out << e.a << ' ' << e.b << '\n';
    finish(out, p);
  }
  const auto kinds_path = dir / "kinds.txt";
  if (s.is_lossless()) {
    auto out = open_out(kinds_path);
    for (SupernodeId x = 0; x < s.num_supernodes(); ++x) {
      out << x << ' ' << to_string(s.kind(x)) << '\n';
    }
    finish(out, kinds_path);
  } else {
    std::filesystem::remove(kinds_path, ec);
  }
  const auto ids_path = dir / "node_ids.txt";
  if (!original_ids.empty()) {
    if (original_ids.size() != s.num_nodes()) {
      throw std::invalid_argument("original id table length does not match node count");
    }
    auto out = open_out(ids_path);
    for (std::size_t u = 0; u < original_ids.size(); ++u) {
      out << u << ' ' << original_ids[u] << '\n';
    }
    finish(out, ids_path);
  } else {
    std::filesystem::remove(ids_path, ec);
  }
  {
    const auto p = dir / "meta.txt";
    auto out = open_out(p);
    for (const auto& [key, value] : meta) out << key << ' ' << value << '\n';
    finish(out, p);
  }
}

SummaryFiles read_summary(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("not a summary directory: " + dir.string());
  SummaryFiles files;

  const auto rows = read_records(dir / "membership.txt", 2);
  std::vector<SupernodeId> membership(rows.size());
  std::vector<bool> seen(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto u = parse_int<NodeId>(rows[i][0], i + 1, "membership.txt");
    if (u >= rows.size() || seen[u]) throw ParseError("membership.txt: bad node id", i + 1);
    seen[u] = true;
    membership[u] = parse_int<SupernodeId>(rows[i][1], i + 1, "membership.txt");
  }

  std::vector<Superedge> superedges;
  const auto erows = read_records(dir / "superedges.txt", 2);
  for (std::size_t i = 0; i < erows.size(); ++i) {
    superedges.push_back({parse_int<SupernodeId>(erows[i][0], i + 1, "superedges.txt"),
                          parse_int<SupernodeId>(erows[i][1], i + 1, "superedges.txt")});
  }

  std::optional<std::vector<SupernodeKind>> kinds;
  if (std::filesystem::exists(dir / "kinds.txt")) {
    const auto krows = read_records(dir / "kinds.txt", 2);
    kinds.emplace(krows.size(), SupernodeKind::singleton);
    for (std::size_t i = 0; i < krows.size(); ++i) {
      const auto x = parse_int<SupernodeId>(krows[i][0], i + 1, "kinds.txt");
      const auto kind = parse_supernode_kind(krows[i][1]);
      if (x >= krows.size() || !kind) throw ParseError("kinds.txt: bad record", i + 1);
      (*kinds)[x] = *kind;
    }
  }
  files.summary = Summary(std::move(membership), std::move(superedges), std::move(kinds));

  if (std::filesystem::exists(dir / "meta.txt")) {
    for (const auto& row : read_records(dir / "meta.txt", 0)) {
      std::string value;
      for (std::size_t i = 1; i < row.size(); ++i) value += (i > 1 ? " " : "") + row[i];
      files.meta.emplace_back(row[0], value);
    }
  }
  if (std::filesystem::exists(dir / "node_ids.txt")) {
    const auto irows = read_records(dir / "node_ids.txt", 2);
    files.original_ids.resize(irows.size());
    for (std::size_t i = 0; i < irows.size(); ++i) {
      const auto u = parse_int<NodeId>(irows[i][0], i + 1, "node_ids.txt");
      if (u >= irows.size()) throw ParseError("node_ids.txt: bad node id", i + 1);
      files.original_ids[u] = parse_int<std::int64_t>(irows[i][1], i + 1, "node_ids.txt");
    }
    if (files.original_ids.size() != files.summary.num_nodes()) {
      throw ParseError("node_ids.txt: length differs from membership.txt", irows.size());
    }
  }
  return files;
}

}  // namespace gsum
