#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ufsr/algebra.hpp"

namespace ufsr {

/// Graded two-sided ideal, stored as a row-reduced subspace of R whose rows
/// are parity-homogeneous.
class Ideal {
 public:
  /// Smallest graded ideal containing `gens`. Inhomogeneous generators
  /// contribute both parity components.
  static Ideal from_generators(const AlgebraPtr& algebra, std::vector<Element> gens);
  static Ideal zero(const AlgebraPtr& algebra);
  static Ideal whole(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  const RowEchelon& space() const noexcept { return space_; }
  std::vector<Element> basis() const;
  std::vector<Element> even_basis() const;
  std::vector<Element> odd_basis() const;
  GradedDims dims() const;
  std::size_t dim() const noexcept { return space_.rank(); }

  bool contains(const Element& a) const;
  /// Canonical representative of a modulo the ideal.
  Element reduce(const Element& a) const;
  bool is_zero() const noexcept { return space_.rank() == 0; }
  bool is_proper() const;

  bool operator==(const Ideal& o) const { return algebra_ == o.algebra_ && space_ == o.space_; }
  bool is_subset_of(const Ideal& o) const { return space_.is_subspace_of(o.space_); }

 private:
  Ideal(AlgebraPtr algebra, std::vector<Element> gens, RowEchelon space);
  friend Ideal ideal_power(const Ideal& ideal, unsigned k);

  AlgebraPtr algebra_;
  std::vector<Element> generators_;
  RowEchelon space_;
};

/// R / I described linearly: residue classes are represented on the basis
/// coordinates that are not pivots of I.
struct QuotientDescription {
  AlgebraPtr source;
  Ideal ideal;
  GradedDims residue_dims;
  /// Basis indices of R whose images form a basis of R / I.
  std::vector<std::size_t> representatives;

  /// Coordinates of the image of a in R / I over `representatives`.
  Vector project(const Element& a) const;
};

QuotientDescription quotient(const Ideal& ideal);

/// J_R = R_1^2 + R_1, the ideal generated by all odd elements.
Ideal canonical_superideal(const AlgebraPtr& algebra);
/// R / J_R.
QuotientDescription superreduction(const AlgebraPtr& algebra);

/// Exhaustive over small finite fields; over infinite fields (or when the
/// ring is too large to enumerate) it is J_R, which holds for superdomains.
Ideal nilradical(const AlgebraPtr& algebra);
bool is_nilpotent(const Element& a);

/// A unit iff the image in R / J_R = K is nonzero.
bool is_unit(const Element& a);
/// a^{-1} = a_0^{-1} * sum_k nu^k with a = a_0 (1 - nu). Throws NotInvertible.
Element invert(const Element& a);

std::vector<Ideal> maximal_ideals(const AlgebraPtr& algebra);
Ideal jacobson_radical(const AlgebraPtr& algebra);
bool is_local(const AlgebraPtr& algebra);

/// Homogeneous x, y outside I with x * y in I, if any. Throws
/// PreconditionError for the unit ideal.
std::optional<std::pair<Element, Element>> prime_ideal_counterexample(const Ideal& ideal);
bool is_prime_ideal(const Ideal& ideal);
/// The quantifier definition, checked on every pair of homogeneous residue
/// representatives. Finite fields only; throws Unsupported otherwise.
bool is_prime_ideal_exhaustive(const Ideal& ideal);
bool is_maximal_ideal(const Ideal& ideal);
/// Every nonzero element of R / I is invertible, checked element by element.
bool is_maximal_ideal_exhaustive(const Ideal& ideal);

bool is_superdomain(const AlgebraPtr& algebra);
bool is_superfield(const AlgebraPtr& algebra);

/// I^k, spanned by k-fold products of basis vectors. Throws DomainError for k = 0.
Ideal ideal_power(const Ideal& ideal, unsigned k);
/// Least m with I^m = 0, or nullopt if I^{dim + 1} != 0.
std::optional<unsigned> nilpotency_index(const Ideal& ideal);

/// Calls f on every element of the span of the given basis indices, in
/// canonical order. Finite fields only.
/// Returning false from f stops the scan; the function then returns false.
bool for_each_in_coordinates(const AlgebraPtr& algebra, const std::vector<std::size_t>& coords,
                             const std::function<bool(const Element&)>& f);

}  // namespace ufsr
