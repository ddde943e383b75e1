// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracle.hpp"
#include "pencil/closure.hpp"
#include "pencil/errors.hpp"
#include "pencil/hierarchy.hpp"
#include "pencil/matrix.hpp"
#include "pencil/realize.hpp"
#include "pencil/structure.hpp"
#include "pencil/verify.hpp"

using namespace pencil;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string describe(const SuiteResult& r) {
  std::string s = std::to_string(r.instances) + " instances, " + std::to_string(r.checks) + " checks";
  if (!r.failures.empty()) s += ", first failure: " + r.failures.front();
  return s;
}

const std::vector<Eigenvalue> kPool{Eigenvalue(0),  Eigenvalue(1), Eigenvalue(-1),
                                    Eigenvalue(2),  Eigenvalue(GaussianRational(mpq_class(1, 2))),
                                    Eigenvalue(GaussianRational(1, 1)), Eigenvalue::infinity()};

// Nullity of P_mu^d by the plain-elimination oracle, infinity through the
// reversal at zero.
int oracle_lemma_nullity(const ExplicitPencil& l, const Eigenvalue& mu, int d) {
  if (mu.is_infinite()) return oracle::nullity(build_P(reversal(l), GaussianRational(0), d));
  return oracle::nullity(build_P(l, mu.finite(), d));
}

Outcome criterion_rank_lemma() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const SuiteResult r = verify_rank_lemma(2024);
  o.require(r.passed(), describe(r));
  o.require(r.instances >= 200, "only " + std::to_string(r.instances) + " structures");

  // Independent recount on a sample: oracle elimination, W and r0 read off
  // the block lists.
  std::mt19937_64 rng(77);
  std::vector<BundleSignature> small;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& sig : enumerate_bundles(m, n))
        if (sig.segre().size() <= 2) small.push_back(sig);
  int sampled = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const BundleSignature& sig = small[rng() % small.size()];
    auto values = kPool;
    std::shuffle(values.begin(), values.end(), rng);
    const PencilStructure s = instantiate(sig, values);
    const ExplicitPencil l = scramble(realize_kcf(s), rng());
    const int r0 = static_cast<int>(s.right().size());
    std::vector<Eigenvalue> points = s.eigenvalues();
    points.emplace_back(GaussianRational(mpq_class(7, 3)));
    for (const auto& mu : points) {
      const auto conj = oracle::conjugate(s.segre_at(mu).parts());
      for (int d = 1; d <= 4; ++d) {
        int want = d * r0;
        for (int i = 0; i < d && i < static_cast<int>(conj.size()); ++i) want += conj[i];
        o.require(oracle_lemma_nullity(l, mu, d) == want,
                  "oracle recount " + serialize(s) + " at " + mu.to_string());
      }
    }
    ++sampled;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 120, "took " + std::to_string(secs) + " s");
  if (o.ok)
    o.detail = describe(r) + "; oracle recount on " + std::to_string(sampled) + " structures; " +
               std::to_string(secs).substr(0, 5) + " s";
  return o;
}

Outcome criterion_coupled_lemma() {
  Outcome o;
  const SuiteResult r = verify_coupled_lemma(2024);
  o.require(r.passed(), describe(r));
  o.require(r.instances >= 100, "only " + std::to_string(r.instances) + " instances");

  std::mt19937_64 rng(78);
  const auto sigs = enumerate_bundles(3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    auto values = kPool;
    values.pop_back();
    std::shuffle(values.begin(), values.end(), rng);
    const PencilStructure s = instantiate(sigs[rng() % sigs.size()], values);
    const ExplicitPencil l = scramble(realize_kcf(s), rng());
    std::vector<GaussianRational> pts{values[0].finite(), GaussianRational(5)};
    std::vector<int> depths{static_cast<int>(rng() % 3) + 1, static_cast<int>(rng() % 3) + 1};
    int sum = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) sum += oracle::nullity(build_P(l, pts[i], depths[i]));
    o.require(oracle::nullity(build_coupled(l, pts, depths)) == sum, "oracle recount " + serialize(s));
  }
  if (o.ok) o.detail = describe(r) + "; 30 oracle recounts";
  return o;
}

Outcome criterion_pervouchine() {
  Outcome o;
  const auto l = parse_structure("3x3: J(3;1) J(2;2)");
  const auto m = parse_structure("3x3: J(2;3)");
  const BundleCheck b = check_bundle(l, m);
  o.require(b.contained, "(a) bundle check said NO");
  o.require(b.witness && b.witness->at(Eigenvalue(3)) == CoalescenceTarget(Eigenvalue(2)) &&
                b.witness->at(Eigenvalue(2)) == CoalescenceTarget(Eigenvalue(2)),
            "(a) witness does not coalesce 3 and 2 to 2");

  const std::vector<Eigenvalue> grid{Eigenvalue(0), Eigenvalue(1), Eigenvalue(2), Eigenvalue(3),
                                     Eigenvalue::infinity()};
  int negatives = 0;
  for (const auto& a : grid) {
    o.require(!orbit_closure_contains(PencilStructure(3, 3, {{a, Partition{2, 1}}}), m),
              "(b) {" + a.to_string() + ":(2,1)} accepted");
    ++negatives;
    for (const auto& c : grid) {
      if (a == c) continue;
      o.require(!orbit_closure_contains(PencilStructure(3, 3, {{a, Partition{2}}, {c, Partition{1}}}), m),
                "(b) two-eigenvalue relabeling accepted");
      ++negatives;
    }
  }

  for (int k : {1, 10, 100}) {
    const auto w = witness_sequence(l, {Eigenvalue(3), Eigenvalue(2)}, Eigenvalue(2), k);
    const GaussianRational one = GaussianRational(2) + GaussianRational(mpq_class(1, k));
    const GaussianRational two = GaussianRational(2) + GaussianRational(mpq_class(2, k));
    o.require(extract_weyr(w.term, one) == Partition{1}, "(c) Weyr at 2+1/k");
    o.require(extract_weyr(w.term, two) == (Partition{1, 1}), "(c) Weyr at 2+2/k");
    o.require(conjugate(extract_weyr(w.term, one)) == Partition{1}, "(c) Segre (1)");
    o.require(conjugate(extract_weyr(w.term, two)) == Partition{2}, "(c) Segre (2)");
    o.require(extract_weyr(w.limit, Eigenvalue(2)) == (Partition{1, 1, 1}), "(c) limit Weyr at 2");
  }
  const SuiteResult r = verify_pervouchine();
  o.require(r.passed(), describe(r));
  if (o.ok) o.detail = "witness {2,3}->2; " + std::to_string(negatives) + " orbit checks NO; k=1,10,100";
  return o;
}

Outcome criterion_duality() {
  Outcome o;
  const SuiteResult r = verify_duality(2024);
  o.require(r.passed() && r.instances == 500, describe(r));

  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::vector<int>> family(1 + rng() % 5);
    for (auto& p : family) {
      p.resize(rng() % 7);
      for (auto& x : p) x = 1 + static_cast<int>(rng() % 8);
      std::sort(p.rbegin(), p.rend());
    }
    std::vector<std::vector<int>> conj;
    for (const auto& p : family) conj.push_back(oracle::conjugate(p));
    o.require(oracle::conjugate(oracle::union_of(family)) == oracle::sum_of(conj), "oracle identity 1");
    o.require(oracle::conjugate(oracle::sum_of(family)) == oracle::union_of(conj), "oracle identity 2");

    std::vector<Partition> lib;
    std::vector<Partition> lib_conj;
    for (const auto& p : family) {
      lib.emplace_back(p);
      lib_conj.push_back(conjugate(lib.back()));
    }
    o.require(conjugate(partition_union(lib)).parts() == oracle::sum_of(conj), "library union side");
    o.require(conjugate(partition_sum(lib)).parts() == oracle::union_of(conj), "library sum side");
  }
  if (o.ok) o.detail = describe(r) + "; 500 oracle families";
  return o;
}

Outcome criterion_order() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const SuiteResult r = verify_order();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(r.passed(), describe(r));
  o.require(secs < 300, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = describe(r) + "; " + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

Outcome criterion_counts() {
  Outcome o;
  for (auto [m, n, want] : {std::tuple{1, 1, 2u}, std::tuple{1, 2, 3u}, std::tuple{2, 2, 7u}}) {
    const auto lib = enumerate_bundles(m, n);
    const auto brute = oracle::brute_force_bundles(m, n);
    std::set<std::string> lib_keys;
    for (const auto& sig : lib) {
      std::vector<std::vector<int>> segre;
      for (const auto& p : sig.segre()) segre.push_back(p.parts());
      lib_keys.insert(oracle::bundle_key(segre, sig.right(), sig.left()));
    }
    const std::string tag = std::to_string(m) + "x" + std::to_string(n);
    o.require(lib.size() == want, tag + ": library count " + std::to_string(lib.size()));
    o.require(brute.size() == want, tag + ": oracle count " + std::to_string(brute.size()));
    o.require(lib_keys == brute, tag + ": library and oracle disagree");
  }
  if (o.ok) o.detail = "(1,1)=2 (1,2)=3 (2,2)=7, matched block by block";
  return o;
}

Outcome criterion_example() {
  Outcome o;
  const auto s = parse_structure("21x22: J(0;2,2,1) J(1;3,2) J(2;4) R(3) R(1) LT(2)");
  const auto full = coalesce(s, {{Eigenvalue(0), Eigenvalue(1)},
                                 {Eigenvalue(1), Eigenvalue(1)},
                                 {Eigenvalue(2), Eigenvalue(1)}});
  o.require(weyr_at(full, Eigenvalue(1)) == (Partition{3, 2, 2, 2, 1, 1, 1, 1, 1}), "full W(1)");
  o.require(right_weyr(full) == (Partition{2, 2, 1, 1}), "r unchanged");
  o.require(left_weyr(full) == (Partition{1, 1, 1}), "l unchanged");
  const auto part = coalesce(s, {{Eigenvalue(0), Eigenvalue(1)},
                                 {Eigenvalue(2), Eigenvalue(1)},
                                 {Eigenvalue(1), Eigenvalue(5)}});
  o.require(weyr_at(part, Eigenvalue(1)) == (Partition{3, 2, 1, 1, 1, 1}), "partial W(1)");
  o.require(weyr_at(part, Eigenvalue(5)) == (Partition{2, 2, 1}), "partial W(5)");
  const auto w = witness_sequence(s, {Eigenvalue(0), Eigenvalue(1), Eigenvalue(2)}, Eigenvalue(1), 10);
  o.require(extract_weyr(w.limit, Eigenvalue(1)) == (Partition{3, 2, 2, 2, 1, 1, 1, 1, 1}),
            "witness limit W(1)");
  if (o.ok) o.detail = "coalescences and witness limit reproduce the displayed Weyr lists";
  return o;
}

Outcome criterion_cjor() {
  Outcome o;
  std::mt19937_64 rng(80);
  std::vector<BundleSignature> sigs;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& sig : enumerate_bundles(m, n))
        if (!sig.segre().empty()) sigs.push_back(sig);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = anonymous_structure(sigs[rng() % sigs.size()]);
    const auto eigs = s.eigenvalues();
    CoalescenceAssignment a;
    for (const auto& mu : eigs) {
      const std::size_t t = rng() % (eigs.size() + 2);
      if (t < eigs.size()) a.emplace(mu, eigs[t]);
      else a.emplace(mu, FreshClass{static_cast<int>(t - eigs.size()) + 1});
    }
    const auto c = coalesce(s, a);
    std::vector<std::vector<int>> before;
    std::vector<std::vector<int>> after;
    for (const auto& [mu, p] : s.segre()) before.push_back(p.parts());
    for (const auto& [mu, p] : c.segre()) after.push_back(p.parts());
    o.require(c_jor(c) == c_jor(s), "c_jor changed for " + serialize(s));
    o.require(oracle::c_jor(after) == oracle::c_jor(before), "oracle c_jor changed for " + serialize(s));
    o.require(c_jor(s) == oracle::c_jor(before), "c_jor disagrees with oracle for " + serialize(s));
  }
  if (o.ok) o.detail = "100 random structures and assignments";
  return o;
}

// Random structure text built from blocks; the size follows from the blocks.
std::string random_structure_text(std::mt19937_64& rng) {
  const std::vector<std::string> eigs{"0", "1", "-3", "1/2", "2+1i", "-1/3-2/5i", "inf", "@a", "@z9"};
  int rows = 0;
  int cols = 0;
  std::string blocks;
  const int count = static_cast<int>(rng() % 5);
  for (int b = 0; b < count; ++b) {
    const int kind = static_cast<int>(rng() % 4);
    const int k = static_cast<int>(rng() % 3);
    if (kind <= 1) {
      const int sz = k + 1;
      blocks += " J(" + eigs[rng() % eigs.size()] + ";" + std::to_string(sz);
      rows += sz;
      cols += sz;
      if (rng() % 2) {
        blocks += ",1";
        rows += 1;
        cols += 1;
      }
      blocks += ")";
    } else if (kind == 2) {
      blocks += " R(" + std::to_string(k) + ")";
      rows += k;
      cols += k + 1;
    } else {
      blocks += " LT(" + std::to_string(k) + ")";
      rows += k + 1;
      cols += k;
    }
  }
  return std::to_string(rows) + "x" + std::to_string(cols) + ":" + blocks;
}

Outcome criterion_cli() {
  Outcome o;
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string text = random_structure_text(rng);
    try {
      const auto s = parse_structure(text);
      const std::string canon = serialize(s);
      o.require(parse_structure(canon) == s, "parse(serialize) differs for " + text);
      o.require(serialize(parse_structure(canon)) == canon, "serialize not stable for " + text);
    } catch (const std::exception& e) {
      o.require(false, text + ": " + e.what());
    }
    if (trial < 10) {
      const auto r = cli::run("coalesce " + cli::quote(text) + " ''");
      o.require(r.code == 0 && r.out == serialize(parse_structure(text)) + "\n",
                "CLI echo differs for " + text);
    }
  }

  struct Scripted {
    std::string args;
    int code;
    std::string line;
  };
  const std::vector<Scripted> script{
      {"check-orbit '3x3: J(2;3)' '3x3: J(2;2,1)'", 0, "VERDICT: YES"},
      {"check-orbit '3x3: J(2;2,1)' '3x3: J(2;3)'", 3, "VERDICT: NO"},
      {"check-bundle '3x3: J(3;1) J(2;2)' '3x3: J(2;3)'", 0, "VERDICT: YES"},
      {"check-bundle '3x3: J(2;3)' '3x3: J(3;1) J(2;2)'", 3, "VERDICT: NO"},
      {"check-orbit '3x3: J(2;3' '3x3: J(2;3)'", 2, ""},
      {"check-orbit '1x1: J(1;1)' '2x2: J(1;2)'", 2, ""},
      {"coalesce '3x3: J(3;1) J(2;2)' '{3,2->2'", 2, ""},
      {"hierarchy 4 4", 2, ""},
      {"hierarchy 2 2 --format text", 0, ""},
      {"verify pervouchine", 0, "VERDICT: PASS"},
      {"verify pervouchine --dmax 1", 4, "VERDICT: FAIL"},
      {"verify unknown-suite", 2, ""},
      {"witness '2x2: J(inf;1) J(1;1)' inf 1", 2, ""},
      {"no-such-command", 2, ""},
  };
  for (const auto& s : script) {
    const auto r = cli::run(s.args);
    o.require(r.code == s.code, s.args + " exited " + std::to_string(r.code));
    if (!s.line.empty()) o.require(cli::has_line(r.out, s.line), s.args + " lacks '" + s.line + "'");
    // Same inputs, same output.
    o.require(cli::run(s.args).out == r.out, s.args + " output not deterministic");
  }
  if (o.ok) o.detail = "100 round trips; " + std::to_string(script.size()) + " scripted invocations";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 rank lemma", criterion_rank_lemma},
      {"2 coupled lemma", criterion_coupled_lemma},
      {"3 pervouchine reproduction", criterion_pervouchine},
      {"4 partition duality", criterion_duality},
      {"5 closure order", criterion_order},
      {"6 enumeration counts", criterion_counts},
      {"7 coalescence example", criterion_example},
      {"8 c_jor invariance", criterion_cjor},
      {"9 cli contract", criterion_cli},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
