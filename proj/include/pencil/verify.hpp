#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pencil/structure.hpp"

namespace pencil {

/// Outcome of one self-check suite.
struct SuiteResult {
  std::string name;
  int instances = 0;  ///< structures, families or scenarios exercised
  int checks = 0;     ///< individual exact comparisons
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// rank-lemma, coupled-lemma, witness, pervouchine, duality, order.
const std::vector<std::string>& suite_names();

/// Runs the named suite. Deterministic in `seed`. `d_max` bounds the Weyr
/// extraction depth in the suites that extract Weyr lists (witness,
/// pervouchine); a bound below the true length makes them fail. Throws
/// DomainError on an unknown name.
SuiteResult run_suite(std::string_view name, std::uint64_t seed,
                      std::optional<int> d_max = std::nullopt);

SuiteResult verify_rank_lemma(std::uint64_t seed);
SuiteResult verify_coupled_lemma(std::uint64_t seed);
SuiteResult verify_witness(std::uint64_t seed, std::optional<int> d_max = std::nullopt);
SuiteResult verify_pervouchine(std::optional<int> d_max = std::nullopt);
SuiteResult verify_duality(std::uint64_t seed);
SuiteResult verify_order();

/// Gives the i-th partition of `sig` the eigenvalue values[i]. Throws
/// DomainError if there are too few values or they repeat.
PencilStructure instantiate(const BundleSignature& sig, const std::vector<Eigenvalue>& values);

}  // namespace pencil
