#include "pencil/eigenvalue.hpp"

#include <cctype>

#include "pencil/errors.hpp"

namespace pencil {

std::string Eigenvalue::to_string() const {
  if (is_infinite()) return "inf";
  if (is_symbolic()) return "@" + label();
  return finite().to_string();
}

namespace {

class TokenReader {
 public:
  TokenReader(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(offset_ + pos_, what); }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits in eigenvalue");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  mpq_class rational() {
    bool negative = accept('-');
    mpz_class num = integer();
    mpz_class den = 1;
    if (accept('/')) {
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected identifier after '@'");
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Eigenvalue parse_eigenvalue(std::string_view text, std::size_t offset) {
  if (text == "inf") return Eigenvalue::infinity();
  TokenReader in(text, offset);
  if (in.accept('@')) {
    Eigenvalue e = Eigenvalue::symbol(in.identifier());
    if (!in.done()) in.fail("unexpected character in symbolic eigenvalue");
    return e;
  }
  mpq_class re = in.rational();
  if (in.done()) return GaussianRational(re);
  bool minus = false;
  if (in.accept('-')) {
    minus = true;
  } else if (!in.accept('+')) {
    in.fail("expected '+', '-' or end of eigenvalue");
  }
  mpq_class im = in.rational();
  if (!in.accept('i')) in.fail("expected 'i' after imaginary part");
  if (!in.done()) in.fail("trailing characters after eigenvalue");
  return GaussianRational(re, minus ? mpq_class(-im) : im);
}

}  // namespace pencil
