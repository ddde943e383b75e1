#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "pencil/gaussian.hpp"

namespace pencil {

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
  friend std::strong_ordering operator<=>(Infinity, Infinity) { return std::strong_ordering::equal; }
};

/// An eigenvalue whose value is left unspecified; two symbols are the same
/// eigenvalue iff their labels match.
struct Symbol {
  std::string label;
  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    return a.label <=> b.label;
  }
};

/// A point of the extended complex plane (exact) or an anonymous label.
///
/// Ordering is the canonical serialization order: finite values by
/// (re, im), then infinity, then symbols by label.
class Eigenvalue {
 public:
  Eigenvalue() = default;
  Eigenvalue(GaussianRational v) : value_(std::move(v)) {}  // NOLINT
  Eigenvalue(long v) : value_(GaussianRational(v)) {}       // NOLINT
  Eigenvalue(Infinity) : value_(Infinity{}) {}              // NOLINT
  Eigenvalue(Symbol s) : value_(std::move(s)) {}            // NOLINT

  static Eigenvalue infinity() { return Infinity{}; }
  static Eigenvalue symbol(std::string label) { return Symbol{std::move(label)}; }

  bool is_finite() const { return std::holds_alternative<GaussianRational>(value_); }
  bool is_infinite() const { return std::holds_alternative<Infinity>(value_); }
  bool is_symbolic() const { return std::holds_alternative<Symbol>(value_); }

  /// Precondition: is_finite().
  const GaussianRational& finite() const { return std::get<GaussianRational>(value_); }
  /// Precondition: is_symbolic().
  const std::string& label() const { return std::get<Symbol>(value_).label; }

  /// Token in the structure grammar: "2", "-1/2", "1+1/2i", "inf", "@a".
  std::string to_string() const;

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
  friend std::strong_ordering operator<=>(const Eigenvalue& a, const Eigenvalue& b) {
    return a.value_ <=> b.value_;
  }

 private:
  std::variant<GaussianRational, Infinity, Symbol> value_;
};

/// Parses a whole eigenvalue token. Throws ParseError; positions are
/// relative to `offset`.
Eigenvalue parse_eigenvalue(std::string_view text, std::size_t offset = 0);

}  // namespace pencil
