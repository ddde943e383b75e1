#include "pencil/structure.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "pencil/errors.hpp"

namespace pencil {

namespace {

void sort_descending(std::vector<int>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

Partition index_weyr(const std::vector<int>& indices) {
  if (indices.empty()) return {};
  int top = *std::max_element(indices.begin(), indices.end());
  std::vector<int> out(static_cast<std::size_t>(top) + 1, 0);
  for (int e : indices)
    for (int i = 0; i <= e; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

}  // namespace

PencilStructure::PencilStructure(int rows, int cols, std::map<Eigenvalue, Partition> segre,
                                 std::vector<int> right, std::vector<int> left)
    : rows_(rows), cols_(cols), right_(std::move(right)), left_(std::move(left)) {
  for (auto& [mu, p] : segre)
    if (!p.empty()) segre_.emplace(mu, std::move(p));
  sort_descending(right_);
  sort_descending(left_);
}

const Partition& PencilStructure::segre_at(const Eigenvalue& mu) const {
  static const Partition kEmpty;
  auto it = segre_.find(mu);
  return it == segre_.end() ? kEmpty : it->second;
}

std::vector<Eigenvalue> PencilStructure::eigenvalues() const {
  std::vector<Eigenvalue> out;
  out.reserve(segre_.size());
  for (const auto& [mu, p] : segre_) out.push_back(mu);
  return out;
}

bool PencilStructure::has_symbolic() const {
  return std::any_of(segre_.begin(), segre_.end(),
                     [](const auto& kv) { return kv.first.is_symbolic(); });
}

BundleSignature::BundleSignature(int rows, int cols, std::vector<Partition> segre,
                                 std::vector<int> right, std::vector<int> left)
    : rows_(rows), cols_(cols), segre_(std::move(segre)), right_(std::move(right)),
      left_(std::move(left)) {
  std::erase_if(segre_, [](const Partition& p) { return p.empty(); });
  std::sort(segre_.begin(), segre_.end(), std::greater<>());
  sort_descending(right_);
  sort_descending(left_);
}

std::vector<std::string> diagnostics(const PencilStructure& s) {
  std::vector<std::string> out;
  if (s.rows() < 0 || s.cols() < 0) out.push_back("negative dimension");
  for (int e : s.right())
    if (e < 0) out.push_back("negative right minimal index " + std::to_string(e));
  for (int e : s.left())
    if (e < 0) out.push_back("negative left minimal index " + std::to_string(e));
  int regular = 0;
  for (const auto& [mu, p] : s.segre()) regular += p.weight();
  const int right_count = static_cast<int>(s.right().size());
  const int left_count = static_cast<int>(s.left().size());
  const int cols = regular + sum_of(s.right()) + right_count + sum_of(s.left());
  const int rows = regular + sum_of(s.right()) + sum_of(s.left()) + left_count;
  if (cols != s.cols())
    out.push_back("column count " + std::to_string(cols) + " != " + std::to_string(s.cols()));
  if (rows != s.rows())
    out.push_back("row count " + std::to_string(rows) + " != " + std::to_string(s.rows()));
  return out;
}

bool validate(const PencilStructure& s) { return diagnostics(s).empty(); }

int rank(const PencilStructure& s) { return s.cols() - static_cast<int>(s.right().size()); }

Partition weyr_at(const PencilStructure& s, const Eigenvalue& mu) {
  return conjugate(s.segre_at(mu));
}

Partition right_weyr(const PencilStructure& s) { return index_weyr(s.right()); }
Partition left_weyr(const PencilStructure& s) { return index_weyr(s.left()); }

BundleSignature signature(const PencilStructure& s) {
  std::vector<Partition> segre;
  for (const auto& [mu, p] : s.segre()) segre.push_back(p);
  return BundleSignature(s.rows(), s.cols(), std::move(segre), s.right(), s.left());
}

PencilStructure anonymous_structure(const BundleSignature& sig) {
  std::map<Eigenvalue, Partition> segre;
  // Zero-padded so label order matches signature order.
  const std::size_t width = std::to_string(sig.segre().size()).size();
  int label = 0;
  for (const auto& p : sig.segre()) {
    std::string digits = std::to_string(++label);
    digits.insert(0, width - digits.size(), '0');
    segre.emplace(Eigenvalue::symbol("e" + digits), p);
  }
  return PencilStructure(sig.rows(), sig.cols(), std::move(segre), sig.right(), sig.left());
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class StructureReader {
 public:
  explicit StructureReader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    if (pos_ - start > 9) throw ParseError(start, "integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Eigenvalue eigenvalue_until(char stop) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != stop &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an eigenvalue");
    return parse_eigenvalue(text_.substr(start, pos_ - start), start);
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PencilStructure parse_structure(std::string_view text) {
  StructureReader in(text);
  const int rows = in.integer();
  in.expect("x");
  const int cols = in.integer();
  in.expect(":");

  std::map<Eigenvalue, std::vector<Partition>> jordan;
  std::vector<int> right;
  std::vector<int> left;
  while (!in.done()) {
    if (in.accept("J(")) {
      Eigenvalue mu = in.eigenvalue_until(';');
      in.expect(";");
      std::vector<int> sizes{in.integer()};
      while (in.accept(",")) sizes.push_back(in.integer());
      const std::size_t at = in.position();
      in.expect(")");
      if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end())
        throw ParseError(at, "Jordan block sizes must be positive");
      if (!std::is_sorted(sizes.begin(), sizes.end(), std::greater<>()))
        throw ParseError(at, "Jordan block sizes must be non-increasing");
      jordan[mu].push_back(Partition(std::move(sizes)));
    } else if (in.accept("R(")) {
      right.push_back(in.integer());
      in.expect(")");
    } else if (in.accept("LT(")) {
      left.push_back(in.integer());
      in.expect(")");
    } else {
      in.fail("expected a block J(...), R(...) or LT(...)");
    }
  }

  std::map<Eigenvalue, Partition> segre;
  for (auto& [mu, lists] : jordan) segre.emplace(mu, partition_union(lists));
  PencilStructure s(rows, cols, std::move(segre), std::move(right), std::move(left));
  if (auto problems = diagnostics(s); !problems.empty()) {
    std::string msg = "inconsistent structure:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw DomainError(msg);
  }
  return s;
}

std::string serialize(const PencilStructure& s) {
  std::string out = std::to_string(s.rows()) + "x" + std::to_string(s.cols()) + ":";
  for (const auto& [mu, p] : s.segre()) {
    out += " J(" + mu.to_string() + ";";
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (i) out += ',';
      out += std::to_string(p[i]);
    }
    out += ')';
  }
  for (int e : s.right()) out += " R(" + std::to_string(e) + ")";
  for (int e : s.left()) out += " LT(" + std::to_string(e) + ")";
  return out;
}

std::string serialize(const BundleSignature& sig) { return serialize(anonymous_structure(sig)); }

}  // namespace pencil
