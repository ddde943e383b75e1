#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pencil/structure.hpp"

namespace pencil {

/// Every bundle of m x n pencils, once each, sorted by canonical text.
std::vector<BundleSignature> enumerate_bundles(int m, int n);

/// Jordan part of the orbit codimension: sum over eigenvalues of
/// S_1 + 3 S_2 + 5 S_3 + ...
int c_jor(const PencilStructure& s);
int c_jor(const BundleSignature& sig);

struct HierarchyNode {
  std::string id;
  BundleSignature signature;
  int c_jor = 0;
  int eig_count = 0;
};

/// Cover graph of bundle-closure inclusion. An edge (from, to) means the
/// closure of `to` sits strictly inside the closure of `from` with nothing in
/// between.
struct HierarchyGraph {
  int rows = 0;
  int cols = 0;
  std::vector<HierarchyNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< node indices
  /// contains[i][j]: closure of node j inside closure of node i.
  std::vector<std::vector<bool>> contains;
};

HierarchyGraph hasse(int m, int n);

std::string export_dot(const HierarchyGraph& g);
/// {"size":[m,n],"nodes":[{"id","signature","c_jor","eig_count"}],"edges":[{"from","to"}]}
std::string export_json(const HierarchyGraph& g);

}  // namespace pencil
