#pragma once

#include <optional>

#include "ufsr/algebra.hpp"

namespace ufsr {

/// Krull superdimension even | odd.
struct KsdimPair {
  std::size_t even = 0;
  std::size_t odd = 0;
  bool operator==(const KsdimPair&) const = default;
};

/// Longest tuple of odd elements with nonzero product. With Kdim R_0 = 0
/// that is the longest system of odd parameters.
///
/// Only tuples of odd basis elements are searched. That is exact: a nonzero
/// product of arbitrary odd elements expands multilinearly into products of
/// odd basis elements, one of which must be nonzero.
std::size_t odd_ksdim(const AlgebraPtr& algebra);

/// Always 0 here. The value is backed by a check that every non-unit of R_0
/// is nilpotent (by enumeration over small finite fields, otherwise through
/// the nilpotency of J_R); throws std::logic_error if that ever fails.
std::size_t even_ksdim(const AlgebraPtr& algebra);

KsdimPair ksdim(const AlgebraPtr& algebra);

struct CotangentReport {
  GradedDims maximal_ideal_dims;
  GradedDims m_squared_dims;
  /// dim (m / m^2) by parity.
  GradedDims sdim;
};

/// Throws PreconditionError for a non-local algebra.
CotangentReport cotangent_sdim(const AlgebraPtr& algebra);

/// Ksdim equals sdim(m / m^2) componentwise.
bool is_regular_superring(const AlgebraPtr& algebra);

struct ArtinianProfile {
  bool artinian = true;
  bool noetherian = true;
  KsdimPair ksdim;
  /// Least n with m^n = 0.
  std::optional<unsigned> maximal_power_vanishing;
  bool all_primes_maximal = false;
};

ArtinianProfile artinian_profile(const AlgebraPtr& algebra);

}  // namespace ufsr
