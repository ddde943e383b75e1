#include <gtest/gtest.h>

#include "printers.hpp"

#include <json.hpp>

#include <random>
#include <set>

#include "oracle.hpp"
#include "pencil/closure.hpp"
#include "pencil/hierarchy.hpp"
#include "pencil/verify.hpp"

using namespace pencil;

namespace {

std::string key(const BundleSignature& sig) {
  std::vector<std::vector<int>> segre;
  for (const auto& p : sig.segre()) segre.push_back(p.parts());
  return oracle::bundle_key(segre, sig.right(), sig.left());
}

// Reachability through the Hasse edges.
std::vector<std::vector<bool>> closure_of_edges(const HierarchyGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [from, to] : g.edges) reach[from][to] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return reach;
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_bundles(0, 0).size(), 1u);
  EXPECT_EQ(enumerate_bundles(1, 1).size(), 2u);
  EXPECT_EQ(enumerate_bundles(1, 2).size(), 3u);
  EXPECT_EQ(enumerate_bundles(2, 2).size(), 7u);
}

TEST(Enumerate, MatchesBlockStackingOracle) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      std::set<std::string> lib;
      for (const auto& sig : enumerate_bundles(m, n)) {
        EXPECT_TRUE(validate(anonymous_structure(sig)));
        EXPECT_TRUE(lib.insert(key(sig)).second) << "duplicate " << serialize(sig);
      }
      EXPECT_EQ(lib, oracle::brute_force_bundles(m, n)) << m << "x" << n;
    }
}

TEST(Enumerate, TransposeSymmetry) {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      EXPECT_EQ(enumerate_bundles(m, n).size(), enumerate_bundles(n, m).size());
}

TEST(Enumerate, SortedByText) {
  const auto sigs = enumerate_bundles(2, 3);
  for (std::size_t i = 1; i < sigs.size(); ++i) EXPECT_LT(serialize(sigs[i - 1]), serialize(sigs[i]));
}

TEST(CJor, Examples) {
  EXPECT_EQ(c_jor(parse_structure("3x3: J(@m;3)")), 3);
  EXPECT_EQ(c_jor(parse_structure("5x5: J(@m;2,2,1)")), 13);
  EXPECT_EQ(c_jor(parse_structure("1x2: R(1)")), 0);
  EXPECT_EQ(c_jor(signature(parse_structure("5x5: J(@m;2,2,1)"))), 13);
}

TEST(CJor, MatchesOracleAndSurvivesCoalescence) {
  std::mt19937_64 rng(23);
  const auto sigs = enumerate_bundles(4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = anonymous_structure(sigs[rng() % sigs.size()]);
    std::vector<std::vector<int>> lists;
    for (const auto& [mu, p] : s.segre()) lists.push_back(p.parts());
    EXPECT_EQ(c_jor(s), oracle::c_jor(lists));

    const auto eigs = s.eigenvalues();
    CoalescenceAssignment a;
    for (const auto& mu : eigs) {
      const std::size_t t = rng() % (eigs.size() + 1);
      a.emplace(mu, t < eigs.size() ? CoalescenceTarget(eigs[t]) : CoalescenceTarget(FreshClass{1}));
    }
    const auto c = coalesce(s, a);
    std::vector<std::vector<int>> merged;
    for (const auto& [mu, p] : c.segre()) merged.push_back(p.parts());
    EXPECT_EQ(oracle::c_jor(merged), oracle::c_jor(lists));
    EXPECT_EQ(c_jor(c), c_jor(s));
  }
}

TEST(Hasse, OneByOne) {
  const HierarchyGraph g = hasse(1, 1);
  ASSERT_EQ(g.nodes.size(), 2u);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(serialize(g.nodes[g.edges[0].first].signature), "1x1: J(@e1;1)");
  EXPECT_EQ(serialize(g.nodes[g.edges[0].second].signature), "1x1: R(0) LT(0)");
}

TEST(Hasse, EmptySize) {
  const HierarchyGraph g = hasse(0, 0);
  EXPECT_EQ(g.nodes.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
}

TEST(Hasse, GenericRegularBundleIsMaximal) {
  const HierarchyGraph g = hasse(2, 2);
  std::size_t generic = g.nodes.size();
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (serialize(g.nodes[i].signature) == "2x2: J(@e1;1) J(@e2;1)") generic = i;
  ASSERT_LT(generic, g.nodes.size());
  for (const auto& [from, to] : g.edges) EXPECT_NE(to, generic);
}

TEST(Hasse, ReductionReproducesTheOrder) {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const HierarchyGraph g = hasse(m, n);
    const auto reach = closure_of_edges(g);
    const std::size_t count = g.nodes.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        EXPECT_EQ(reach[i][j], static_cast<bool>(g.contains[i][j]));
        if (i != j) EXPECT_FALSE(reach[i][j] && reach[j][i]) << "cycle";
      }
    // No edge is implied by a longer path.
    for (const auto& [from, to] : g.edges)
      for (std::size_t k = 0; k < count; ++k)
        if (k != from && k != to) EXPECT_FALSE(reach[from][k] && reach[k][to]);
  }
}

TEST(Hasse, EveryNodeBelowSomeMaximalNode) {
  const HierarchyGraph g = hasse(3, 3);
  const auto reach = closure_of_edges(g);
  const std::size_t count = g.nodes.size();
  std::vector<bool> has_incoming(count, false);
  for (const auto& [from, to] : g.edges) has_incoming[to] = true;
  for (std::size_t j = 0; j < count; ++j) {
    bool reached = false;
    for (std::size_t i = 0; i < count; ++i)
      if (!has_incoming[i] && reach[i][j]) reached = true;
    EXPECT_TRUE(reached) << serialize(g.nodes[j].signature);
  }
}

TEST(Export, Dot) {
  const std::string dot = export_dot(hasse(1, 1));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("n0 [label=\"1x1: J(@e1;1)\\nc_jor=1\"];"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
  EXPECT_EQ(export_dot(hasse(1, 1)), dot);
}

TEST(Export, JsonRoundTrips) {
  const HierarchyGraph g = hasse(2, 2);
  const auto doc = nlohmann::json::parse(export_json(g));
  EXPECT_EQ(doc["size"], nlohmann::json::array({2, 2}));
  ASSERT_EQ(doc["nodes"].size(), g.nodes.size());
  ASSERT_EQ(doc["edges"].size(), g.edges.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    EXPECT_EQ(doc["nodes"][i]["id"], g.nodes[i].id);
    EXPECT_EQ(doc["nodes"][i]["signature"], serialize(g.nodes[i].signature));
    EXPECT_EQ(doc["nodes"][i]["c_jor"], g.nodes[i].c_jor);
    EXPECT_EQ(doc["nodes"][i]["eig_count"], g.nodes[i].eig_count);
    EXPECT_EQ(signature(parse_structure(doc["nodes"][i]["signature"].get<std::string>())),
              g.nodes[i].signature);
  }
}
