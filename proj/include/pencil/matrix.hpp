#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pencil/eigenvalue.hpp"
#include "pencil/gaussian.hpp"
#include "pencil/partition.hpp"

namespace pencil {

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);

  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussianRational& operator()(int i, int j) { return data_[index(i, j)]; }
  const GaussianRational& operator()(int i, int j) const { return data_[index(i, j)]; }

  /// Copies `block` with its top-left corner at (row, col).
  void set_block(int row, int col, const ExactMatrix& block);
  bool is_zero() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& m);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Debug text: one line per row, entries separated by ", ".
std::string to_text(const ExactMatrix& m);

/// The pencil lambda*B + A.
class ExplicitPencil {
 public:
  ExplicitPencil() = default;
  /// Throws DomainError if the sizes differ.
  ExplicitPencil(ExactMatrix a, ExactMatrix b);

  const ExactMatrix& a() const { return a_; }
  const ExactMatrix& b() const { return b_; }
  int rows() const { return a_.rows(); }
  int cols() const { return a_.cols(); }

  /// A + mu*B.
  ExactMatrix at(const GaussianRational& mu) const;

  friend bool operator==(const ExplicitPencil&, const ExplicitPencil&) = default;

 private:
  ExactMatrix a_;
  ExactMatrix b_;
};

/// Exact rank by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
int rank_exact(const ExactMatrix& m);
/// Dimension of the right null space.
int nullity(const ExactMatrix& m);

/// Normal rank: the maximum rank of L(x) over x = 0, 1, ..., min(m, n).
int pencil_rank(const ExplicitPencil& l);

/// d x d block lower bidiagonal matrix with L(mu) on the diagonal and B on
/// the first block subdiagonal.
ExactMatrix build_P(const ExplicitPencil& l, const GaussianRational& mu, int d);

/// Block lower-triangular coupling of P(points[i], depths[i]): the diagonal
/// blocks are build_P and each junction carries a single B in the top-right
/// block of the subdiagonal block. Throws DomainError on repeated points or
/// mismatched lengths.
ExactMatrix build_coupled(const ExplicitPencil& l, std::span<const GaussianRational> points,
                          std::span<const int> depths);

/// rev(lambda*B + A) = lambda*A + B.
ExplicitPencil reversal(const ExplicitPencil& l);

/// Weyr characteristic of `mu` read off the null spaces of build_P for
/// d = 1..d_max (default min(m, n)). Infinity is handled through the
/// reversal at 0. Throws DomainError for symbolic eigenvalues and if the
/// extracted sequence is not a partition.
Partition extract_weyr(const ExplicitPencil& l, const Eigenvalue& mu,
                       std::optional<int> d_max = std::nullopt);

}  // namespace pencil
