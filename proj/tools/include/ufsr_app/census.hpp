#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ufsr/algebra.hpp"
#include "ufsr/dimension.hpp"
#include "ufsr/factorization.hpp"

namespace ufsr::app {

struct CensusOptions {
  std::uint64_t seed = 0;
  unsigned samples = 200;
  unsigned max_gens = 3;
  /// "F2", "F3" or "mixed".
  std::string field = "mixed";
  unsigned cap = 16;
};

/// Random algebras: n uniform in 1..max_gens odd generators t1..tn and 0 to
/// 3 relations, each a random nonzero combination of the products ti*tj.
/// Deterministic in the options (mt19937_64, raw draws reduced mod range).
/// Throws Unsupported for other fields and PreconditionError unless
/// 1 <= max_gens <= 4.
std::vector<AlgebraSpec> census_specs(const CensusOptions& options);

struct CensusRow {
  std::size_t index = 0;
  AlgebraSpec spec;
  GradedDims dims;
  /// Empty when the UFSR check hit a size limit.
  std::optional<UfsrStatus> ufsr;
  std::string skipped_reason;
  bool superdomain = false;
  bool superfield = false;
  bool regular = false;
  KsdimPair ksdim;
  std::optional<unsigned> nilpotency_index;
  /// The structure theorems for UFSR superdomains, checked on this row.
  bool theorems_apply = false;
  std::vector<std::string> failures;
};

CensusRow classify(std::size_t index, const AlgebraSpec& spec, unsigned cap = 16);
std::vector<CensusRow> run_census(const CensusOptions& options);

}  // namespace ufsr::app
