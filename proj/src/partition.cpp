#include "pencil/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pencil {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  for (int x : parts) {
    if (x < 0) throw std::invalid_argument("partition part is negative");
    if (x == 0) continue;
    if (!parts_.empty() && parts_.back() < x)
      throw std::invalid_argument("partition parts must be non-increasing");
    parts_.push_back(x);
  }
}

Partition Partition::from_multiset(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

Partition partition_union(std::span<const Partition> ps) {
  std::vector<int> all;
  for (const auto& p : ps) all.insert(all.end(), p.parts().begin(), p.parts().end());
  return Partition::from_multiset(std::move(all));
}

Partition partition_sum(std::span<const Partition> ps) {
  std::size_t len = 0;
  for (const auto& p : ps) len = std::max(len, p.length());
  std::vector<int> out(len, 0);
  for (const auto& p : ps)
    for (std::size_t i = 0; i < p.length(); ++i) out[i] += p[i];
  return Partition(std::move(out));
}

bool majorizes_with_offset(const Partition& p, const Partition& q, int h) {
  // Past max(len p, len q) both prefix sums are constant while the offset
  // term keeps moving by h, so a negative h fails eventually for any p.
  if (h < 0) return false;
  long long lhs = 0;
  long long rhs = 0;
  for (std::size_t j = 0; j < p.length(); ++j) {
    lhs += p[j];
    rhs += q[j] + h;
    if (lhs > rhs) return false;
  }
  return true;
}

}  // namespace pencil
