#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "pencil/matrix.hpp"
#include "pencil/structure.hpp"

namespace pencil {

/// Block-diagonal canonical pencil for `s`: Jordan blocks lambda*I + J_k(mu),
/// infinite blocks lambda*N_k + I_k, then R_k and R_k^T, in serialization
/// order. Throws DomainError on invalid structures or symbolic eigenvalues.
ExplicitPencil realize_kcf(const PencilStructure& s);

/// (P*A*Q, P*B*Q) with P, Q products of unit lower and unit upper
/// triangular matrices whose off-diagonal entries come from {-2..2}.
/// Deterministic in `seed`.
ExplicitPencil scramble(const ExplicitPencil& l, std::uint64_t seed);

/// Size and superdiagonal positions (1-based, 1 <= i < size) of an E matrix.
struct CouplingSpec {
  int size = 0;
  std::set<int> positions;
};

/// size x size matrix with ones exactly at (i, i+1) for i in positions
/// (1-based). Throws DomainError on out-of-band positions.
ExactMatrix build_E(const CouplingSpec& spec);

/// A pencil in the bundle of `s` whose grouped eigenvalues sit at
/// target + i/k, and its entrywise limit as k grows, where the group has
/// coalesced to `target`.
struct WitnessSequence {
  ExplicitPencil term;
  ExplicitPencil limit;
  /// Group eigenvalues in construction order (descending block count, ties
  /// in caller order) and where each one sits in `term`.
  std::vector<Eigenvalue> order;
  std::vector<GaussianRational> displaced;
};

/// Layered construction: the j-th largest Jordan blocks of the group members
/// form one layer, chained into a single upper bidiagonal block by an E
/// matrix at the cumulative size boundaries. Throws DomainError for an empty,
/// repeated, non-finite or foreign group member, a non-finite target, k < 1,
/// or a displaced value or target that collides with an untouched eigenvalue.
WitnessSequence witness_sequence(const PencilStructure& s, const std::vector<Eigenvalue>& group,
                                 const Eigenvalue& target, int k);

}  // namespace pencil
