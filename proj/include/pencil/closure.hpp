#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pencil/structure.hpp"

namespace pencil {

/// A new eigenvalue value, distinct from every named one. Sources sharing a
/// fresh class coalesce with each other.
struct FreshClass {
  int id = 0;
  friend bool operator==(const FreshClass&, const FreshClass&) = default;
  friend std::strong_ordering operator<=>(const FreshClass&, const FreshClass&) = default;
};

using CoalescenceTarget = std::variant<Eigenvalue, FreshClass>;

/// Where each eigenvalue of a source structure goes.
using CoalescenceAssignment = std::map<Eigenvalue, CoalescenceTarget>;

/// Merges eigenvalues along `a`: the Segre characteristic at each target is
/// the pointwise sum over its preimage (the Weyr characteristic is the
/// union); singular data and size are unchanged. Fresh classes are named by
/// `fresh_names`, defaulting to @fresh<id>. Throws DomainError if `a` is not
/// total on the eigenvalues of `s`, or two distinct targets share a value.
PencilStructure coalesce(const PencilStructure& s, const CoalescenceAssignment& a,
                         const std::map<int, Eigenvalue>& fresh_names = {});

/// Outcome of the orbit-closure rank conditions for M against L.
struct OrbitCheck {
  int h = 0;  ///< rank L - rank M
  bool right_ok = false;
  bool left_ok = false;
  bool eigen_ok = false;
  /// Eigenvalues where the Weyr majorization fails; empty with !eigen_ok
  /// means h < 0 already fails it at every point.
  std::vector<Eigenvalue> failing;
  bool contained() const { return right_ok && left_ok && eigen_ok; }
};

/// Throws DomainError on invalid structures, size mismatch or symbolic
/// eigenvalues.
OrbitCheck check_orbit(const PencilStructure& l, const PencilStructure& m);
/// True iff M lies in the closure of the orbit of L.
bool orbit_closure_contains(const PencilStructure& l, const PencilStructure& m);

struct BundleCheck {
  bool contained = false;
  /// Maps each eigenvalue of L to an eigenvalue of M or a fresh class.
  std::optional<CoalescenceAssignment> witness;
};

/// Decides whether the bundle closure of M is included in that of L by
/// searching coalescence assignments Lambda(L) -> Lambda(M) u {fresh}, each
/// fresh-bound source in a class of its own. The reported witness is the
/// first in lexicographic order (targets in M's eigenvalue order, fresh
/// last). Symbolic eigenvalues are allowed. Throws DomainError on invalid
/// structures or size mismatch.
BundleCheck check_bundle(const PencilStructure& l, const PencilStructure& m);
BundleCheck check_bundle(const BundleSignature& l, const BundleSignature& m);
bool bundle_closure_contains(const PencilStructure& l, const PencilStructure& m);
bool bundle_closure_contains(const BundleSignature& l, const BundleSignature& m);

/// Same search, but over every grouping of the fresh-bound sources. Slower;
/// kept to cross-check the per-source fresh classes of check_bundle.
BundleCheck check_bundle_all_fresh_groupings(const PencilStructure& l, const PencilStructure& m);

/// Bundle inclusion for structures of square matrices lambda*I - A: no
/// singular blocks and no infinite eigenvalue. Throws DomainError otherwise.
bool matrix_bundle_contains(const PencilStructure& a, const PencilStructure& b);

/// "{e1,e2}->t; {e3}->fresh". Each fresh group is its own class. Throws
/// ParseError.
CoalescenceAssignment parse_assignment(std::string_view text);
/// Inverse of parse_assignment; groups ordered by target, fresh last.
std::string format_assignment(const CoalescenceAssignment& a);

/// Adds identity targets for the eigenvalues of `s` missing from `a`.
CoalescenceAssignment complete_with_identity(const PencilStructure& s, CoalescenceAssignment a);

}  // namespace pencil
