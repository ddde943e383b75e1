#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace pencil {

/// Exact complex number re + im*i with arbitrary-precision rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); a total order for canonical sorting only.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  /// "3", "-1/2", "1+2i", "1/3-1/2i".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::string rational_to_string(const mpq_class& q);

}  // namespace pencil
