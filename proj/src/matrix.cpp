#include "pencil/matrix.hpp"

#include <algorithm>
#include <utility>

#include "pencil/errors.hpp"

namespace pencil {

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void ExactMatrix::set_block(int row, int col, const ExactMatrix& block) {
  if (row < 0 || col < 0 || row + block.rows_ > rows_ || col + block.cols_ > cols_)
    throw DomainError("block does not fit");
  for (int i = 0; i < block.rows_; ++i)
    for (int j = 0; j < block.cols_; ++j) (*this)(row + i, col + j) = block(i, j);
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& x) { return x.is_zero(); });
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum size mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& m) {
  ExactMatrix out = m;
  for (auto& x : out.data_)
    if (!x.is_zero()) x *= s;
  return out;
}

std::string to_text(const ExactMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

ExplicitPencil::ExplicitPencil(ExactMatrix a, ExactMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
    throw DomainError("pencil coefficients differ in size");
}

ExactMatrix ExplicitPencil::at(const GaussianRational& mu) const {
  if (mu.is_zero()) return a_;
  return a_ + mu * b_;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

struct GaussInt {
  mpz_class re;
  mpz_class im;
};

bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
bool is_zero(const GaussInt& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
bool same(const mpz_class& a, const mpz_class& b) { return a == b; }
bool same(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

void divexact(mpz_class& x, const mpz_class& d) {
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

void divexact(GaussInt& x, const GaussInt& d) {
  if (sgn(d.im) == 0) {
    divexact(x.re, d.re);
    divexact(x.im, d.re);
    return;
  }
  mpz_class norm = d.re * d.re + d.im * d.im;
  mpz_class re = x.re * d.re + x.im * d.im;
  mpz_class im = x.im * d.re - x.re * d.im;
  divexact(re, norm);
  divexact(im, norm);
  x.re = std::move(re);
  x.im = std::move(im);
}

// x <- (p*x - q*y) / prev
void bareiss_update(mpz_class& x, const mpz_class& p, const mpz_class& q, const mpz_class& y,
                    const mpz_class& prev) {
  x *= p;
  if (!is_zero(y)) x -= q * y;
  divexact(x, prev);
}

void bareiss_update(GaussInt& x, const GaussInt& p, const GaussInt& q, const GaussInt& y,
                    const GaussInt& prev) {
  x = mul(x, p);
  if (!is_zero(y)) {
    GaussInt qy = mul(q, y);
    x.re -= qy.re;
    x.im -= qy.im;
  }
  divexact(x, prev);
}

void scale_exact(mpz_class& x, const mpz_class& p, const mpz_class& prev) {
  x *= p;
  divexact(x, prev);
}

void scale_exact(GaussInt& x, const GaussInt& p, const GaussInt& prev) {
  x = mul(x, p);
  divexact(x, prev);
}

// Row echelon reduction with column skipping; after each pivot step every
// entry below is a minor of the input, so the divisions are exact.
template <class Elem>
int bareiss_rank(std::vector<std::vector<Elem>> a, int cols, const Elem& one) {
  const int rows = static_cast<int>(a.size());
  Elem prev = one;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = r;
    while (pivot < rows && is_zero(a[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    const Elem& p = a[r][c];
    const bool unit_step = same(p, prev);
    for (int i = r + 1; i < rows; ++i) {
      auto& row = a[i];
      if (is_zero(row[c])) {
        if (unit_step) continue;
        for (int j = c + 1; j < cols; ++j)
          if (!is_zero(row[j])) scale_exact(row[j], p, prev);
        continue;
      }
      const Elem q = row[c];
      for (int j = c + 1; j < cols; ++j) {
        if (is_zero(row[j]) && is_zero(a[r][j])) continue;
        bareiss_update(row[j], p, q, a[r][j], prev);
      }
      row[c] = Elem{};
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

bool all_real(const ExactMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_real()) return false;
  return true;
}

mpz_class row_denominator(const ExactMatrix& m, int i) {
  mpz_class l = 1;
  for (int j = 0; j < m.cols(); ++j) {
    const auto& x = m(i, j);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
  }
  return l;
}

mpz_class scaled(const mpq_class& q, const mpz_class& l) {
  mpz_class out = l;
  divexact(out, q.get_den());
  return out * q.get_num();
}

}  // namespace

int rank_exact(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (all_real(m)) {
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
      const mpz_class l = row_denominator(m, i);
      a[i].reserve(static_cast<std::size_t>(m.cols()));
      for (int j = 0; j < m.cols(); ++j) a[i].push_back(scaled(m(i, j).re(), l));
    }
    return bareiss_rank(std::move(a), m.cols(), mpz_class(1));
  }
  std::vector<std::vector<GaussInt>> a(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    const mpz_class l = row_denominator(m, i);
    a[i].reserve(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j)
      a[i].push_back({scaled(m(i, j).re(), l), scaled(m(i, j).im(), l)});
  }
  return bareiss_rank(std::move(a), m.cols(), GaussInt{1, 0});
}

int nullity(const ExactMatrix& m) { return m.cols() - rank_exact(m); }

int pencil_rank(const ExplicitPencil& l) {
  const int bound = std::min(l.rows(), l.cols());
  int best = 0;
  // A nonzero maximal minor has degree <= bound, so it survives at one of
  // bound + 1 distinct points.
  for (int x = 0; x <= bound && best < bound; ++x)
    best = std::max(best, rank_exact(l.at(GaussianRational(x))));
  return best;
}

ExactMatrix build_P(const ExplicitPencil& l, const GaussianRational& mu, int d) {
  if (d < 1) throw DomainError("block depth must be positive");
  const int m = l.rows();
  const int n = l.cols();
  const ExactMatrix diag = l.at(mu);
  ExactMatrix out(d * m, d * n);
  for (int k = 0; k < d; ++k) {
    out.set_block(k * m, k * n, diag);
    if (k > 0) out.set_block(k * m, (k - 1) * n, l.b());
  }
  return out;
}

ExactMatrix build_coupled(const ExplicitPencil& l, std::span<const GaussianRational> points,
                          std::span<const int> depths) {
  if (points.empty() || points.size() != depths.size())
    throw DomainError("coupled matrix needs one depth per point and at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw DomainError("coupled matrix points must be distinct");
  const int m = l.rows();
  const int n = l.cols();
  int total = 0;
  for (int d : depths) {
    if (d < 1) throw DomainError("block depth must be positive");
    total += d;
  }
  ExactMatrix out(total * m, total * n);
  int offset = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.set_block(offset * m, offset * n, build_P(l, points[i], depths[i]));
    if (i > 0) out.set_block(offset * m, (offset - 1) * n, l.b());
    offset += depths[i];
  }
  return out;
}

ExplicitPencil reversal(const ExplicitPencil& l) { return ExplicitPencil(l.b(), l.a()); }

Partition extract_weyr(const ExplicitPencil& l, const Eigenvalue& mu, std::optional<int> d_max) {
  if (mu.is_symbolic()) throw DomainError("cannot extract Weyr data at a symbolic eigenvalue");
  if (mu.is_infinite()) return extract_weyr(reversal(l), Eigenvalue(0), d_max);
  const int depth = d_max.value_or(std::min(l.rows(), l.cols()));
  if (depth < 0) throw DomainError("negative depth");
  const int r0 = l.cols() - pencil_rank(l);
  std::vector<int> weyr;
  int previous = 0;
  for (int d = 1; d <= depth; ++d) {
    const int current = nullity(build_P(l, mu.finite(), d));
    const int w = current - previous - r0;
    if (w < 0 || (!weyr.empty() && w > weyr.back()))
      throw DomainError("extracted Weyr sequence is not a partition");
    weyr.push_back(w);
    previous = current;
    if (w == 0) break;
  }
  return Partition(std::move(weyr));
}

}  // namespace pencil
