#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pencil {

/// A non-increasing list of positive integers with an implicit tail of zeros.
///
/// Used for Segre characteristics (block sizes), Weyr characteristics
/// (block counts) and the singular-index counts of a pencil. Zero parts are
/// dropped on construction so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  /// Sorts an arbitrary multiset of non-negative integers into a partition.
  static Partition from_multiset(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  /// i-th part, 0-based; zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// "(a,b,c)", or "()" when empty.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the parts, so (3) > (2,2,1) > (2,2) > ().
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// i-th element of the result counts the parts that are >= i.
Partition conjugate(const Partition& p);

/// Multiset union of all parts, re-sorted.
Partition partition_union(std::span<const Partition> ps);

/// Pointwise sum with zero padding.
Partition partition_sum(std::span<const Partition> ps);

/// True iff sum_{i<=j} p_i <= sum_{i<=j} q_i + j*h for every j >= 1, over
/// the infinite zero-padded lists.
bool majorizes_with_offset(const Partition& p, const Partition& q, int h);

}  // namespace pencil
