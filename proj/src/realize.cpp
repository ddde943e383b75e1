#include "pencil/realize.hpp"

#include <algorithm>
#include <random>

#include "pencil/errors.hpp"

namespace pencil {

namespace {

ExplicitPencil direct_sum(const std::vector<ExplicitPencil>& blocks) {
  int rows = 0;
  int cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ExactMatrix a(rows, cols);
  ExactMatrix b(rows, cols);
  int r = 0;
  int c = 0;
  for (const auto& blk : blocks) {
    a.set_block(r, c, blk.a());
    b.set_block(r, c, blk.b());
    r += blk.rows();
    c += blk.cols();
  }
  return ExplicitPencil(std::move(a), std::move(b));
}

ExplicitPencil finite_jordan(int size, const GaussianRational& mu) {
  ExactMatrix a(size, size);
  for (int i = 0; i < size; ++i) {
    a(i, i) = -mu;
    if (i + 1 < size) a(i, i + 1) = 1;
  }
  return ExplicitPencil(std::move(a), ExactMatrix::identity(size));
}

ExplicitPencil infinite_jordan(int size) {
  ExactMatrix b(size, size);
  for (int i = 0; i + 1 < size; ++i) b(i, i + 1) = 1;
  return ExplicitPencil(ExactMatrix::identity(size), std::move(b));
}

ExplicitPencil right_singular(int k) {
  ExactMatrix a(k, k + 1);
  ExactMatrix b(k, k + 1);
  for (int i = 0; i < k; ++i) {
    b(i, i) = 1;
    a(i, i + 1) = 1;
  }
  return ExplicitPencil(std::move(a), std::move(b));
}

ExplicitPencil left_singular(int k) {
  ExactMatrix a(k + 1, k);
  ExactMatrix b(k + 1, k);
  for (int i = 0; i < k; ++i) {
    b(i, i) = 1;
    a(i + 1, i) = 1;
  }
  return ExplicitPencil(std::move(a), std::move(b));
}

// Assumes row/column dimensions are already consistent.
std::vector<ExplicitPencil> canonical_blocks(const PencilStructure& s) {
  std::vector<ExplicitPencil> blocks;
  for (const auto& [mu, segre] : s.segre()) {
    if (mu.is_symbolic())
      throw DomainError("cannot realize symbolic eigenvalue " + mu.to_string());
    for (int size : segre.parts())
      blocks.push_back(mu.is_infinite() ? infinite_jordan(size) : finite_jordan(size, mu.finite()));
  }
  for (int e : s.right()) blocks.push_back(right_singular(e));
  for (int e : s.left()) blocks.push_back(left_singular(e));
  return blocks;
}

ExactMatrix random_unit_triangular(int n, bool lower, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  ExactMatrix t = ExactMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lower ? j < i : j > i) t(i, j) = entry(rng);
  return t;
}

ExactMatrix random_unimodular(int n, std::mt19937_64& rng) {
  ExactMatrix lower = random_unit_triangular(n, true, rng);
  ExactMatrix upper = random_unit_triangular(n, false, rng);
  return lower * upper;
}

// One layer of the witness construction: lambda*I + J_{sizes[i]}(values[i])
// stacked diagonally and chained by ones at the block boundaries.
ExplicitPencil coupled_layer(const std::vector<int>& sizes,
                             const std::vector<GaussianRational>& values) {
  std::vector<ExplicitPencil> parts;
  CouplingSpec chain;
  int boundary = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    parts.push_back(finite_jordan(sizes[i], values[i]));
    boundary += sizes[i];
    if (i + 1 < sizes.size()) chain.positions.insert(boundary);
  }
  chain.size = boundary;
  ExplicitPencil layer = direct_sum(parts);
  return ExplicitPencil(layer.a() + build_E(chain), layer.b());
}

}  // namespace

ExplicitPencil realize_kcf(const PencilStructure& s) {
  if (auto problems = diagnostics(s); !problems.empty())
    throw DomainError("cannot realize inconsistent structure: " + problems.front());
  ExplicitPencil out = direct_sum(canonical_blocks(s));
  if (out.rows() != s.rows() || out.cols() != s.cols())
    throw DomainError("realized size does not match structure");
  return out;
}

ExplicitPencil scramble(const ExplicitPencil& l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ExactMatrix p = random_unimodular(l.rows(), rng);
  const ExactMatrix q = random_unimodular(l.cols(), rng);
  return ExplicitPencil(p * l.a() * q, p * l.b() * q);
}

ExactMatrix build_E(const CouplingSpec& spec) {
  if (spec.size < 0) throw DomainError("negative E size");
  ExactMatrix e(spec.size, spec.size);
  for (int i : spec.positions) {
    if (i < 1 || i >= spec.size) throw DomainError("E position out of band");
    e(i - 1, i) = 1;
  }
  return e;
}

WitnessSequence witness_sequence(const PencilStructure& s, const std::vector<Eigenvalue>& group,
                                 const Eigenvalue& target, int k) {
  if (auto problems = diagnostics(s); !problems.empty())
    throw DomainError("inconsistent structure: " + problems.front());
  if (k < 1) throw DomainError("k must be positive");
  if (group.empty()) throw DomainError("coalescing group is empty");
  if (!target.is_finite()) throw DomainError("witness target must be finite");
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto& mu = group[i];
    if (s.segre().count(mu) == 0) throw DomainError(mu.to_string() + " is not an eigenvalue");
    if (!mu.is_finite())
      throw DomainError("witness sequences only coalesce finite eigenvalues, got " + mu.to_string());
    if (std::find(group.begin(), group.begin() + static_cast<long>(i), mu) !=
        group.begin() + static_cast<long>(i))
      throw DomainError("repeated group member " + mu.to_string());
  }

  WitnessSequence out;
  out.order = group;
  std::stable_sort(out.order.begin(), out.order.end(), [&](const auto& x, const auto& y) {
    return s.segre_at(x).length() > s.segre_at(y).length();
  });

  std::map<Eigenvalue, Partition> untouched;
  int grouped_weight = 0;
  for (const auto& [mu, p] : s.segre()) {
    if (std::find(group.begin(), group.end(), mu) == group.end()) {
      untouched.emplace(mu, p);
    } else {
      grouped_weight += p.weight();
    }
  }

  for (std::size_t i = 0; i < out.order.size(); ++i) {
    GaussianRational shift(mpq_class(static_cast<long>(i + 1), static_cast<unsigned long>(k)));
    out.displaced.push_back(target.finite() + shift);
  }
  if (untouched.count(target)) throw DomainError("target collides with an untouched eigenvalue");
  for (const auto& v : out.displaced)
    if (untouched.count(Eigenvalue(v)))
      throw DomainError("displaced eigenvalue " + v.to_string() +
                        " collides with an untouched eigenvalue");

  std::vector<ExplicitPencil> term_blocks;
  std::vector<ExplicitPencil> limit_blocks;
  const std::size_t layers = s.segre_at(out.order.front()).length();
  for (std::size_t j = 0; j < layers; ++j) {
    std::vector<int> sizes;
    std::vector<GaussianRational> moving;
    std::vector<GaussianRational> fixed;
    for (std::size_t i = 0; i < out.order.size(); ++i) {
      const Partition& segre = s.segre_at(out.order[i]);
      if (j >= segre.length()) break;
      sizes.push_back(segre[j]);
      moving.push_back(out.displaced[i]);
      fixed.push_back(target.finite());
    }
    term_blocks.push_back(coupled_layer(sizes, moving));
    limit_blocks.push_back(coupled_layer(sizes, fixed));
  }

  const PencilStructure rest(s.rows() - grouped_weight, s.cols() - grouped_weight,
                             std::move(untouched), s.right(), s.left());
  const ExplicitPencil tail = realize_kcf(rest);
  term_blocks.push_back(tail);
  limit_blocks.push_back(tail);
  out.term = direct_sum(term_blocks);
  out.limit = direct_sum(limit_blocks);
  return out;
}

}  // namespace pencil
