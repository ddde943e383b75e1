#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pencil/eigenvalue.hpp"
#include "pencil/partition.hpp"

namespace pencil {

/// Complete strict-equivalence invariant of an m x n pencil: the Segre
/// characteristic of every eigenvalue plus the right and left minimal
/// indices.
///
/// The constructor only normalizes (drops eigenvalues with an empty Segre
/// characteristic, sorts minimal indices descending); use validate() to check
/// the block-count identities.
class PencilStructure {
 public:
  PencilStructure() = default;
  PencilStructure(int rows, int cols, std::map<Eigenvalue, Partition> segre,
                  std::vector<int> right = {}, std::vector<int> left = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<Eigenvalue, Partition>& segre() const { return segre_; }
  /// Empty partition when `mu` is not an eigenvalue.
  const Partition& segre_at(const Eigenvalue& mu) const;
  const std::vector<int>& right() const { return right_; }
  const std::vector<int>& left() const { return left_; }

  std::vector<Eigenvalue> eigenvalues() const;
  bool has_symbolic() const;
  bool is_regular() const { return right_.empty() && left_.empty(); }

  friend bool operator==(const PencilStructure&, const PencilStructure&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<Eigenvalue, Partition> segre_;
  std::vector<int> right_;
  std::vector<int> left_;
};

/// A pencil structure with the eigenvalue values forgotten: identifies a
/// bundle.
class BundleSignature {
 public:
  BundleSignature() = default;
  BundleSignature(int rows, int cols, std::vector<Partition> segre, std::vector<int> right,
                  std::vector<int> left);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// One partition per distinct eigenvalue, sorted descending.
  const std::vector<Partition>& segre() const { return segre_; }
  const std::vector<int>& right() const { return right_; }
  const std::vector<int>& left() const { return left_; }

  friend bool operator==(const BundleSignature&, const BundleSignature&) = default;
  friend std::strong_ordering operator<=>(const BundleSignature&, const BundleSignature&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Partition> segre_;
  std::vector<int> right_;
  std::vector<int> left_;
};

/// Empty when `s` satisfies every counting identity.
std::vector<std::string> diagnostics(const PencilStructure& s);
bool validate(const PencilStructure& s);

/// Normal rank, n - #right blocks.
int rank(const PencilStructure& s);
Partition weyr_at(const PencilStructure& s, const Eigenvalue& mu);
/// Element i (from 0) counts right minimal indices >= i.
Partition right_weyr(const PencilStructure& s);
Partition left_weyr(const PencilStructure& s);

BundleSignature signature(const PencilStructure& s);
/// Representative of a bundle with symbolic eigenvalues @e1, @e2, ... in
/// signature order.
PencilStructure anonymous_structure(const BundleSignature& sig);

/// Grammar:
///   structure := INT "x" INT ":" block*
///   block     := "J(" eig ";" INT ("," INT)* ")" | "R(" INT ")" | "LT(" INT ")"
/// Repeated J blocks for one eigenvalue are merged. Throws ParseError on
/// malformed text and DomainError if the counts are inconsistent.
PencilStructure parse_structure(std::string_view text);
/// Canonical form: eigenvalues in Eigenvalue order, then R, then LT, with
/// indices descending.
std::string serialize(const PencilStructure& s);
std::string serialize(const BundleSignature& sig);

}  // namespace pencil
