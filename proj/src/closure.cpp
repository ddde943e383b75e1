#include "pencil/closure.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "pencil/errors.hpp"

namespace pencil {

namespace {

void require_valid(const PencilStructure& s, const char* which) {
  if (auto problems = diagnostics(s); !problems.empty())
    throw DomainError(std::string(which) + " is inconsistent: " + problems.front());
}

void require_same_size(const PencilStructure& l, const PencilStructure& m) {
  if (l.rows() != m.rows() || l.cols() != m.cols())
    throw DomainError("closure relations need pencils of the same size");
}

}  // namespace

PencilStructure coalesce(const PencilStructure& s, const CoalescenceAssignment& a,
                         const std::map<int, Eigenvalue>& fresh_names) {
  require_valid(s, "structure");
  for (const auto& [src, tgt] : a)
    if (s.segre().count(src) == 0)
      throw DomainError("assignment mentions " + src.to_string() + ", not an eigenvalue");

  auto name_of = [&](const CoalescenceTarget& t) -> Eigenvalue {
    if (const auto* e = std::get_if<Eigenvalue>(&t)) return *e;
    const int id = std::get<FreshClass>(t).id;
    auto it = fresh_names.find(id);
    return it != fresh_names.end() ? it->second : Eigenvalue::symbol("fresh" + std::to_string(id));
  };

  std::map<Eigenvalue, CoalescenceTarget> owner;
  std::map<Eigenvalue, std::vector<Partition>> preimage;
  for (const auto& [mu, segre] : s.segre()) {
    auto it = a.find(mu);
    if (it == a.end()) throw DomainError("assignment does not cover " + mu.to_string());
    const Eigenvalue value = name_of(it->second);
    auto [slot, inserted] = owner.emplace(value, it->second);
    if (!inserted && slot->second != it->second)
      throw DomainError("two distinct targets share the value " + value.to_string());
    preimage[value].push_back(segre);
  }

  std::map<Eigenvalue, Partition> segre;
  for (const auto& [value, parts] : preimage) segre.emplace(value, partition_sum(parts));
  return PencilStructure(s.rows(), s.cols(), std::move(segre), s.right(), s.left());
}

OrbitCheck check_orbit(const PencilStructure& l, const PencilStructure& m) {
  require_valid(l, "L");
  require_valid(m, "M");
  require_same_size(l, m);
  if (l.has_symbolic() || m.has_symbolic())
    throw DomainError("orbit closures need concrete eigenvalues");

  OrbitCheck out;
  out.h = rank(l) - rank(m);
  out.right_ok = majorizes_with_offset(right_weyr(m), right_weyr(l), out.h);
  out.left_ok = majorizes_with_offset(left_weyr(m), left_weyr(l), out.h);
  // Off both spectra the condition reads () < (h, h, ...), i.e. h >= 0.
  out.eigen_ok = out.h >= 0;
  std::set<Eigenvalue> points;
  for (const auto& [mu, p] : l.segre()) points.insert(mu);
  for (const auto& [mu, p] : m.segre()) points.insert(mu);
  for (const auto& mu : points) {
    if (!majorizes_with_offset(weyr_at(l, mu), weyr_at(m, mu), out.h)) {
      out.eigen_ok = false;
      out.failing.push_back(mu);
    }
  }
  return out;
}

bool orbit_closure_contains(const PencilStructure& l, const PencilStructure& m) {
  return check_orbit(l, m).contained();
}

// ---------------------------------------------------------------------------
// Bundle search

namespace {

struct SearchData {
  std::vector<Eigenvalue> sources;
  std::vector<Partition> source_weyr;
  std::vector<Eigenvalue> targets;
  std::vector<Partition> target_weyr;
  int h = 0;
};

SearchData prepare(const PencilStructure& l, const PencilStructure& m) {
  SearchData d;
  d.h = rank(l) - rank(m);
  for (const auto& [mu, segre] : l.segre()) {
    d.sources.push_back(mu);
    d.source_weyr.push_back(conjugate(segre));
  }
  for (const auto& [mu, segre] : m.segre()) {
    d.targets.push_back(mu);
    d.target_weyr.push_back(conjugate(segre));
  }
  return d;
}

// choice[i] < #targets names a target of M; larger values name fresh
// classes by offset.
bool satisfies(const SearchData& d, const std::vector<int>& choice) {
  const int targets = static_cast<int>(d.targets.size());
  std::map<int, std::vector<Partition>> groups;
  for (std::size_t i = 0; i < choice.size(); ++i) groups[choice[i]].push_back(d.source_weyr[i]);
  for (const auto& [slot, weyrs] : groups) {
    const Partition merged = partition_union(weyrs);
    const Partition& bound = slot < targets ? d.target_weyr[slot] : Partition{};
    if (!majorizes_with_offset(merged, bound, d.h)) return false;
  }
  return true;
}

CoalescenceAssignment to_assignment(const SearchData& d, const std::vector<int>& choice) {
  const int targets = static_cast<int>(d.targets.size());
  CoalescenceAssignment out;
  std::map<int, int> fresh_ids;
  for (std::size_t i = 0; i < choice.size(); ++i) {
    if (choice[i] < targets) {
      out.emplace(d.sources[i], d.targets[choice[i]]);
    } else {
      auto [it, inserted] = fresh_ids.emplace(choice[i], static_cast<int>(fresh_ids.size()) + 1);
      out.emplace(d.sources[i], FreshClass{it->second});
    }
  }
  return out;
}

// Odometer over choice vectors with the first source most significant. With
// separate classes the single fresh digit is renumbered per source; merging
// fresh groups only enlarges the union that must sit under (h, h, ...).
BundleCheck search(const PencilStructure& l, const PencilStructure& m, bool all_groupings) {
  require_valid(l, "L");
  require_valid(m, "M");
  require_same_size(l, m);
  const SearchData d = prepare(l, m);
  BundleCheck out;
  if (d.h < 0) return out;
  if (!majorizes_with_offset(right_weyr(m), right_weyr(l), d.h) ||
      !majorizes_with_offset(left_weyr(m), left_weyr(l), d.h))
    return out;

  const int targets = static_cast<int>(d.targets.size());
  const std::size_t n = d.sources.size();
  const int radix = targets + (all_groupings ? static_cast<int>(n) : 1);
  std::vector<int> digits(n, 0);
  std::vector<int> choice(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i)
      choice[i] = (!all_groupings && digits[i] == targets) ? targets + static_cast<int>(i) : digits[i];
    if (satisfies(d, choice)) {
      out.contained = true;
      out.witness = to_assignment(d, choice);
      return out;
    }
    std::size_t pos = n;
    while (pos > 0 && digits[pos - 1] == radix - 1) digits[--pos] = 0;
    if (pos == 0) return out;
    ++digits[pos - 1];
  }
}

}  // namespace

BundleCheck check_bundle(const PencilStructure& l, const PencilStructure& m) {
  return search(l, m, false);
}

BundleCheck check_bundle(const BundleSignature& l, const BundleSignature& m) {
  return check_bundle(anonymous_structure(l), anonymous_structure(m));
}

BundleCheck check_bundle_all_fresh_groupings(const PencilStructure& l, const PencilStructure& m) {
  return search(l, m, true);
}

bool bundle_closure_contains(const PencilStructure& l, const PencilStructure& m) {
  return check_bundle(l, m).contained;
}

bool bundle_closure_contains(const BundleSignature& l, const BundleSignature& m) {
  return check_bundle(l, m).contained;
}

bool matrix_bundle_contains(const PencilStructure& a, const PencilStructure& b) {
  for (const auto* s : {&a, &b}) {
    require_valid(*s, "matrix structure");
    if (s->rows() != s->cols() || !s->is_regular())
      throw DomainError("matrix structures are square with no singular blocks");
    if (s->segre().count(Eigenvalue::infinity()))
      throw DomainError("matrix structures have no infinite eigenvalue");
  }
  return bundle_closure_contains(a, b);
}

// ---------------------------------------------------------------------------
// Assignment text

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

CoalescenceAssignment parse_assignment(std::string_view text) {
  CoalescenceAssignment out;
  int next_fresh = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::size_t offset = start;
    std::string_view clause = trim(text.substr(start, end - start), offset);
    start = end + 1;
    if (clause.empty()) continue;

    if (clause.front() != '{') throw ParseError(offset, "expected '{'");
    const std::size_t close = clause.find('}');
    if (close == std::string_view::npos) throw ParseError(offset, "missing '}'");
    std::vector<Eigenvalue> sources;
    std::size_t item_start = 1;
    while (item_start <= close) {
      std::size_t comma = clause.find(',', item_start);
      if (comma == std::string_view::npos || comma > close) comma = close;
      std::size_t item_offset = offset + item_start;
      std::string_view item = trim(clause.substr(item_start, comma - item_start), item_offset);
      if (item.empty()) throw ParseError(item_offset, "empty eigenvalue in group");
      sources.push_back(parse_eigenvalue(item, item_offset));
      item_start = comma + 1;
    }
    std::size_t rest_offset = offset + close + 1;
    std::string_view rest = trim(clause.substr(close + 1), rest_offset);
    if (rest.substr(0, 2) != "->") throw ParseError(rest_offset, "expected '->'");
    rest_offset += 2;
    std::string_view target_text = trim(rest.substr(2), rest_offset);
    if (target_text.empty()) throw ParseError(rest_offset, "missing target");
    CoalescenceTarget target = target_text == "fresh"
                                   ? CoalescenceTarget(FreshClass{++next_fresh})
                                   : CoalescenceTarget(parse_eigenvalue(target_text, rest_offset));
    for (auto& src : sources)
      if (!out.emplace(src, target).second)
        throw ParseError(offset, "eigenvalue " + src.to_string() + " assigned twice");
  }
  return out;
}

std::string format_assignment(const CoalescenceAssignment& a) {
  std::map<CoalescenceTarget, std::vector<Eigenvalue>> groups;
  for (const auto& [src, tgt] : a) groups[tgt].push_back(src);
  std::string out;
  for (const auto& [tgt, sources] : groups) {
    if (!out.empty()) out += "; ";
    out += '{';
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (i) out += ',';
      out += sources[i].to_string();
    }
    out += "}->";
    out += std::holds_alternative<FreshClass>(tgt) ? std::string("fresh")
                                                  : std::get<Eigenvalue>(tgt).to_string();
  }
  return out;
}

CoalescenceAssignment complete_with_identity(const PencilStructure& s, CoalescenceAssignment a) {
  for (const auto& mu : s.eigenvalues()) a.emplace(mu, mu);
  return a;
}

}  // namespace pencil
