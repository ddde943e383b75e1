#include "pencil/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pencil/closure.hpp"
#include "pencil/errors.hpp"
#include "pencil/hierarchy.hpp"
#include "pencil/matrix.hpp"
#include "pencil/realize.hpp"

namespace pencil {

namespace {

using Rng = std::mt19937_64;

GaussianRational frac(long num, long den, long im_num = 0, long im_den = 1) {
  return GaussianRational(mpq_class(num, den), mpq_class(im_num, im_den));
}

// Values eigenvalues are drawn from; probes never meet them.
std::vector<Eigenvalue> eigen_pool() {
  return {Eigenvalue(0),          Eigenvalue(1),           Eigenvalue(-1),
          Eigenvalue(2),          Eigenvalue(frac(1, 2)),  Eigenvalue(frac(1, 1, 1, 1)),
          Eigenvalue(frac(-1, 3, 2, 1)), Eigenvalue::infinity()};
}

std::vector<GaussianRational> probe_pool() {
  return {GaussianRational(3), GaussianRational(-2), frac(2, 1, -1, 1), frac(5, 2)};
}

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

int pick_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Every bundle up to 4x4 with at most two eigenvalues.
const std::vector<BundleSignature>& small_bundles() {
  static const std::vector<BundleSignature> all = [] {
    std::vector<BundleSignature> out;
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n)
        for (auto& sig : enumerate_bundles(m, n))
          if (sig.segre().size() <= 2) out.push_back(std::move(sig));
    return out;
  }();
  return all;
}

PencilStructure random_structure(Rng& rng, bool finite_only) {
  const auto& all = small_bundles();
  auto values = eigen_pool();
  if (finite_only) values.pop_back();
  std::shuffle(values.begin(), values.end(), rng);
  return instantiate(all[pick(rng, all.size())], values);
}

void expect(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) r.failures.push_back(what);
}

int lemma_nullity(const ExplicitPencil& l, const Eigenvalue& mu, int d) {
  if (mu.is_infinite()) return nullity(build_P(reversal(l), GaussianRational(0), d));
  return nullity(build_P(l, mu.finite(), d));
}

int lemma_prediction(const Partition& w, int r0, int d) {
  int total = d * r0;
  for (int i = 0; i < d; ++i) total += w[static_cast<std::size_t>(i)];
  return total;
}

ExactMatrix minus(const ExactMatrix& a, const ExactMatrix& b) {
  return a + GaussianRational(-1) * b;
}

}  // namespace

PencilStructure instantiate(const BundleSignature& sig, const std::vector<Eigenvalue>& values) {
  if (values.size() < sig.segre().size()) throw DomainError("not enough eigenvalue values");
  std::map<Eigenvalue, Partition> segre;
  for (std::size_t i = 0; i < sig.segre().size(); ++i)
    if (!segre.emplace(values[i], sig.segre()[i]).second)
      throw DomainError("repeated eigenvalue value " + values[i].to_string());
  return PencilStructure(sig.rows(), sig.cols(), std::move(segre), sig.right(), sig.left());
}

SuiteResult verify_rank_lemma(std::uint64_t seed) {
  SuiteResult r;
  r.name = "rank-lemma";
  Rng rng(seed);
  // Every small bundle at least once, then more instantiations of a shuffled
  // cycle until 240 structures have been checked.
  auto sigs = small_bundles();
  std::shuffle(sigs.begin(), sigs.end(), rng);
  const auto probes = probe_pool();

  for (std::size_t n = 0; n < std::max<std::size_t>(sigs.size(), 240); ++n) {
    const BundleSignature& sig = sigs[n % sigs.size()];
    auto values = eigen_pool();
    std::shuffle(values.begin(), values.end(), rng);
    const PencilStructure s = instantiate(sig, values);
    const int r0 = s.cols() - rank(s);
    std::vector<Eigenvalue> points = s.eigenvalues();
    points.emplace_back(probes[pick(rng, probes.size())]);

    std::vector<ExplicitPencil> pencils{realize_kcf(s)};
    for (int i = 0; i < 3; ++i) pencils.push_back(scramble(pencils.front(), rng()));
    for (const auto& l : pencils)
      for (const auto& mu : points)
        for (int d = 1; d <= 4; ++d) {
          const int got = lemma_nullity(l, mu, d);
          const int want = lemma_prediction(weyr_at(s, mu), r0, d);
          expect(r, got == want,
                 serialize(s) + " at " + mu.to_string() + ", d=" + std::to_string(d) + ": nullity " +
                     std::to_string(got) + ", predicted " + std::to_string(want));
        }
    ++r.instances;
  }
  return r;
}

SuiteResult verify_coupled_lemma(std::uint64_t seed) {
  SuiteResult r;
  r.name = "coupled-lemma";
  Rng rng(seed);
  for (int inst = 0; inst < 120; ++inst) {
    const PencilStructure s = random_structure(rng, false);
    const ExplicitPencil l = scramble(realize_kcf(s), rng());

    std::vector<GaussianRational> candidates = probe_pool();
    for (const auto& mu : s.eigenvalues())
      if (mu.is_finite()) candidates.push_back(mu.finite());
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const std::size_t count = static_cast<std::size_t>(pick_int(rng, 1, 3));
    std::vector<GaussianRational> points(candidates.begin(),
                                         candidates.begin() + static_cast<long>(count));
    std::vector<int> depths;
    int predicted = 0;
    for (const auto& p : points) {
      depths.push_back(pick_int(rng, 1, 3));
      predicted += nullity(build_P(l, p, depths.back()));
    }
    const int got = nullity(build_coupled(l, points, depths));
    std::string where = serialize(s) + " points";
    for (std::size_t i = 0; i < points.size(); ++i)
      where += " " + points[i].to_string() + "^" + std::to_string(depths[i]);
    expect(r, got == predicted,
           where + ": coupled nullity " + std::to_string(got) + ", sum " + std::to_string(predicted));
    ++r.instances;
  }
  return r;
}

SuiteResult verify_witness(std::uint64_t seed, std::optional<int> d_max) {
  SuiteResult r;
  r.name = "witness";
  Rng rng(seed);
  const std::vector<int> ks{1, 10, 100};
  int attempts = 0;
  while (r.instances < 60 && attempts < 1000) {
    ++attempts;
    const PencilStructure s = random_structure(rng, true);
    std::vector<Eigenvalue> eigs = s.eigenvalues();
    if (eigs.empty()) continue;
    std::shuffle(eigs.begin(), eigs.end(), rng);
    std::vector<Eigenvalue> group(eigs.begin(),
                                  eigs.begin() + pick_int(rng, 1, static_cast<int>(eigs.size())));

    std::vector<Eigenvalue> targets = group;
    for (const auto& v : eigen_pool())
      if (v.is_finite()) targets.push_back(v);
    std::shuffle(targets.begin(), targets.end(), rng);

    std::vector<WitnessSequence> runs;
    Eigenvalue target;
    for (const auto& candidate : targets) {
      try {
        for (int k : ks) runs.push_back(witness_sequence(s, group, candidate, k));
        target = candidate;
        break;
      } catch (const DomainError&) {
        runs.clear();
      }
    }
    if (runs.empty()) continue;

    std::vector<Partition> group_weyr;
    for (const auto& mu : group) group_weyr.push_back(weyr_at(s, mu));
    const Partition merged = partition_union(group_weyr);
    const std::string tag = serialize(s) + " -> " + target.to_string();

    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      const auto& w = runs[ki];
      const std::string at_k = tag + " (k=" + std::to_string(ks[ki]) + ")";
      for (std::size_t i = 0; i < w.order.size(); ++i)
        expect(r, extract_weyr(w.term, w.displaced[i], d_max) == weyr_at(s, w.order[i]),
               at_k + ": Weyr at " + w.displaced[i].to_string());
      expect(r, extract_weyr(w.limit, target, d_max) == merged, at_k + ": limit Weyr at target");
      for (const auto& mu : s.eigenvalues()) {
        if (std::find(group.begin(), group.end(), mu) != group.end()) continue;
        expect(r, extract_weyr(w.term, mu, d_max) == weyr_at(s, mu), at_k + ": term Weyr at " + mu.to_string());
        expect(r, extract_weyr(w.limit, mu, d_max) == weyr_at(s, mu),
               at_k + ": limit Weyr at " + mu.to_string());
      }
      for (const auto* p : {&w.term, &w.limit}) {
        const int prank = pencil_rank(*p);
        expect(r, p->cols() - prank == static_cast<int>(s.right().size()), at_k + ": r0");
        expect(r, p->rows() - prank == static_cast<int>(s.left().size()), at_k + ": l0");
      }
      // k * (term - limit) does not depend on k, so term -> limit entrywise.
      expect(r, w.limit == runs.front().limit, at_k + ": limit depends on k");
      expect(r, w.term.b() == w.limit.b(), at_k + ": B differs from the limit");
      const GaussianRational scale_k(ks[ki]);
      expect(r,
             scale_k * minus(w.term.a(), w.limit.a()) ==
                 GaussianRational(ks.front()) * minus(runs.front().term.a(), runs.front().limit.a()),
             at_k + ": term does not approach the limit like 1/k");
    }
    ++r.instances;
  }
  if (r.instances < 60) r.failures.push_back("only " + std::to_string(r.instances) + " usable instances");
  return r;
}

SuiteResult verify_pervouchine(std::optional<int> d_max) {
  SuiteResult r;
  r.name = "pervouchine";
  const PencilStructure l = parse_structure("3x3: J(3;1) J(2;2)");
  const PencilStructure m = parse_structure("3x3: J(2;3)");

  const BundleCheck bundle = check_bundle(l, m);
  CoalescenceAssignment expected{{Eigenvalue(2), Eigenvalue(2)}, {Eigenvalue(3), Eigenvalue(2)}};
  expect(r, bundle.contained, "bundle closure of L misses M");
  expect(r, bundle.witness == expected, "witness is not {2,3}->2");
  ++r.instances;

  const std::vector<Eigenvalue> grid{Eigenvalue(0), Eigenvalue(1), Eigenvalue(2), Eigenvalue(3),
                                     Eigenvalue::infinity()};
  for (const auto& a : grid) {
    const PencilStructure single(3, 3, {{a, Partition{2, 1}}});
    expect(r, !orbit_closure_contains(single, m), "orbit check accepts {" + a.to_string() + ":(2,1)}");
    ++r.instances;
  }
  for (const auto& a : grid)
    for (const auto& b : grid) {
      if (a == b) continue;
      const PencilStructure split(3, 3, {{a, Partition{2}}, {b, Partition{1}}});
      expect(r, !orbit_closure_contains(split, m),
             "orbit check accepts {" + a.to_string() + ":(2)," + b.to_string() + ":(1)}");
      ++r.instances;
    }

  for (int k : {1, 10, 100}) {
    const WitnessSequence w = witness_sequence(l, {Eigenvalue(3), Eigenvalue(2)}, Eigenvalue(2), k);
    const std::string at_k = " (k=" + std::to_string(k) + ")";
    const GaussianRational first = GaussianRational(2) + frac(1, k);
    const GaussianRational second = GaussianRational(2) + frac(2, k);
    expect(r, extract_weyr(w.term, first, d_max) == Partition{1}, "Weyr at 2+1/k" + at_k);
    expect(r, extract_weyr(w.term, second, d_max) == Partition{1, 1}, "Weyr at 2+2/k" + at_k);
    expect(r, extract_weyr(w.limit, Eigenvalue(2), d_max) == Partition{1, 1, 1}, "limit Weyr at 2" + at_k);
    ++r.instances;
  }
  return r;
}

SuiteResult verify_duality(std::uint64_t seed) {
  SuiteResult r;
  r.name = "duality";
  Rng rng(seed);
  for (int inst = 0; inst < 500; ++inst) {
    std::vector<Partition> family;
    const int count = pick_int(rng, 1, 5);
    for (int i = 0; i < count; ++i) {
      std::vector<int> parts(static_cast<std::size_t>(pick_int(rng, 0, 6)));
      for (auto& p : parts) p = pick_int(rng, 1, 8);
      family.push_back(Partition::from_multiset(parts));
    }
    std::vector<Partition> conjugates;
    for (const auto& p : family) conjugates.push_back(conjugate(p));
    std::string tag;
    for (const auto& p : family) tag += p.to_string();
    expect(r, conjugate(partition_union(family)) == partition_sum(conjugates),
           tag + ": conjugate of union");
    expect(r, conjugate(partition_sum(family)) == partition_union(conjugates),
           tag + ": conjugate of sum");
    ++r.instances;
  }
  return r;
}

SuiteResult verify_order() {
  SuiteResult r;
  r.name = "order";
  // Concrete values for the i-th anonymous eigenvalue of L and of M.
  const std::vector<std::pair<std::vector<Eigenvalue>, std::vector<Eigenvalue>>> instantiations{
      {{Eigenvalue(0), Eigenvalue(1), Eigenvalue(2)}, {Eigenvalue(0), Eigenvalue(1), Eigenvalue(2)}},
      {{Eigenvalue::infinity(), Eigenvalue(0), Eigenvalue(1)},
       {Eigenvalue(0), Eigenvalue::infinity(), Eigenvalue(3)}},
  };

  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}}) {
    const auto sigs = enumerate_bundles(m, n);
    const std::size_t count = sigs.size();
    std::vector<std::vector<bool>> rel(count, std::vector<bool>(count));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) rel[i][j] = bundle_closure_contains(sigs[i], sigs[j]);

    for (std::size_t i = 0; i < count; ++i) expect(r, rel[i][i], "not reflexive at " + serialize(sigs[i]));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        if (i != j)
          expect(r, !(rel[i][j] && rel[j][i]),
                 "mutual containment of " + serialize(sigs[i]) + " and " + serialize(sigs[j]));
        for (std::size_t k = 0; k < count; ++k)
          if (rel[i][j] && rel[j][k])
            expect(r, rel[i][k],
                   "not transitive through " + serialize(sigs[i]) + ", " + serialize(sigs[j]) + ", " +
                       serialize(sigs[k]));
      }

    for (const auto& [lv, mv] : instantiations)
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
          const PencilStructure l = instantiate(sigs[i], lv);
          const PencilStructure mm = instantiate(sigs[j], mv);
          if (orbit_closure_contains(l, mm))
            expect(r, bundle_closure_contains(l, mm),
                   "orbit but not bundle: " + serialize(l) + " over " + serialize(mm));
        }

    for (const auto& sig : sigs) {
      const PencilStructure s = anonymous_structure(sig);
      const auto eigs = s.eigenvalues();
      const std::size_t k = eigs.size();
      if (k > 3) continue;
      std::vector<std::size_t> f(k, 0);
      while (true) {
        CoalescenceAssignment a;
        for (std::size_t i = 0; i < k; ++i) a.emplace(eigs[i], eigs[f[i]]);
        expect(r, bundle_closure_contains(s, coalesce(s, a)),
               "coalescence not contained: " + serialize(s) + " by " + format_assignment(a));
        std::size_t pos = k;
        while (pos > 0 && f[pos - 1] == k - 1) f[--pos] = 0;
        if (pos == 0) break;
        ++f[pos - 1];
      }
    }
    r.instances += static_cast<int>(count);
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rank-lemma", "coupled-lemma", "witness",
                                              "pervouchine", "duality",       "order"};
  return names;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed, std::optional<int> d_max) {
  if (name == "rank-lemma") return verify_rank_lemma(seed);
  if (name == "coupled-lemma") return verify_coupled_lemma(seed);
  if (name == "witness") return verify_witness(seed, d_max);
  if (name == "pervouchine") return verify_pervouchine(d_max);
  if (name == "duality") return verify_duality(seed);
  if (name == "order") return verify_order();
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace pencil
