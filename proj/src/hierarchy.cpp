#include "pencil/hierarchy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "pencil/closure.hpp"

namespace pencil {

namespace {

// Non-increasing sequences of `count` integers >= 0 with sum <= budget.
void index_multisets(int count, int budget, int cap, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
  if (count == 0) {
    out.push_back(prefix);
    return;
  }
  for (int v = std::min(cap, budget); v >= 0; --v) {
    prefix.push_back(v);
    index_multisets(count - 1, budget - v, v, prefix, out);
    prefix.pop_back();
  }
}

void partitions_of(int weight, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (weight == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int v = std::min(cap, weight); v >= 1; --v) {
    prefix.push_back(v);
    partitions_of(weight - v, v, prefix, out);
    prefix.pop_back();
  }
}

// Multisets of nonempty partitions with total weight `weight`, drawn from
// `pool` at indices >= `from` (so each multiset is produced once).
void partition_multisets(const std::vector<Partition>& pool, std::size_t from, int weight,
                         std::vector<Partition>& prefix, std::vector<std::vector<Partition>>& out) {
  if (weight == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (pool[i].weight() > weight) continue;
    prefix.push_back(pool[i]);
    partition_multisets(pool, i, weight - pool[i].weight(), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BundleSignature> enumerate_bundles(int m, int n) {
  std::vector<BundleSignature> out;
  if (m < 0 || n < 0) return out;
  const int top = std::min(m, n);

  std::vector<Partition> pool;
  for (int w = 1; w <= top; ++w) {
    std::vector<int> prefix;
    partitions_of(w, w, prefix, pool);
  }

  for (int rho = 0; rho <= top; ++rho) {
    std::vector<std::vector<int>> rights;
    std::vector<int> prefix;
    index_multisets(n - rho, rho, rho, prefix, rights);
    for (const auto& right : rights) {
      const int right_sum = std::accumulate(right.begin(), right.end(), 0);
      std::vector<std::vector<int>> lefts;
      index_multisets(m - rho, rho - right_sum, rho, prefix, lefts);
      for (const auto& left : lefts) {
        const int left_sum = std::accumulate(left.begin(), left.end(), 0);
        const int regular = rho - right_sum - left_sum;
        std::vector<std::vector<Partition>> spectra;
        std::vector<Partition> chosen;
        partition_multisets(pool, 0, regular, chosen, spectra);
        for (auto& segre : spectra) out.emplace_back(m, n, std::move(segre), right, left);
      }
    }
  }

  std::vector<std::pair<std::string, BundleSignature>> keyed;
  keyed.reserve(out.size());
  for (auto& sig : out) keyed.emplace_back(serialize(sig), std::move(sig));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [text, sig] : keyed) out.push_back(std::move(sig));
  return out;
}

namespace {

int jordan_codimension(const Partition& segre) {
  int total = 0;
  for (std::size_t i = 0; i < segre.length(); ++i) total += (2 * static_cast<int>(i) + 1) * segre[i];
  return total;
}

}  // namespace

int c_jor(const PencilStructure& s) {
  int total = 0;
  for (const auto& [mu, segre] : s.segre()) total += jordan_codimension(segre);
  return total;
}

int c_jor(const BundleSignature& sig) {
  int total = 0;
  for (const auto& segre : sig.segre()) total += jordan_codimension(segre);
  return total;
}

HierarchyGraph hasse(int m, int n) {
  HierarchyGraph g;
  g.rows = m;
  g.cols = n;
  const auto sigs = enumerate_bundles(m, n);
  for (std::size_t i = 0; i < sigs.size(); ++i)
    g.nodes.push_back({"n" + std::to_string(i), sigs[i], c_jor(sigs[i]),
                       static_cast<int>(sigs[i].segre().size())});

  const std::size_t count = sigs.size();
  g.contains.assign(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      g.contains[i][j] = i == j || bundle_closure_contains(sigs[i], sigs[j]);

  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !g.contains[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < count && covered; ++k)
        if (k != i && k != j && g.contains[i][k] && g.contains[k][j]) covered = false;
      if (covered) g.edges.emplace_back(i, j);
    }
  return g;
}

std::string export_dot(const HierarchyGraph& g) {
  std::ostringstream out;
  out << "digraph bundles_" << g.rows << "x" << g.cols << " {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (const auto& node : g.nodes)
    out << "  " << node.id << " [label=\"" << serialize(node.signature) << "\\nc_jor=" << node.c_jor
        << "\"];\n";
  for (const auto& [from, to] : g.edges)
    out << "  " << g.nodes[from].id << " -> " << g.nodes[to].id << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const HierarchyGraph& g) {
  nlohmann::json doc;
  doc["size"] = {g.rows, g.cols};
  doc["nodes"] = nlohmann::json::array();
  for (const auto& node : g.nodes)
    doc["nodes"].push_back({{"id", node.id},
                            {"signature", serialize(node.signature)},
                            {"c_jor", node.c_jor},
                            {"eig_count", node.eig_count}});
  doc["edges"] = nlohmann::json::array();
  for (const auto& [from, to] : g.edges)
    doc["edges"].push_back({{"from", g.nodes[from].id}, {"to", g.nodes[to].id}});
  return doc.dump(2) + "\n";
}

}  // namespace pencil
