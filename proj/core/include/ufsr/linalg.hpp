#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ufsr/scalar.hpp"

namespace ufsr {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Domain& d, std::size_t n);
bool is_zero_vector(const Vector& v);

/// Fully reduced row echelon basis of a subspace of K^n. The pivot of a row
/// is its highest nonzero coordinate, normalized to 1; every pivot column is
/// zero in all other rows, so the basis is unique for a given subspace.
class RowEchelon {
 public:
  RowEchelon(Domain d, std::size_t n) : domain_(d), n_(n) {}

  /// Adds v to the spanning set. Returns true when the rank grew.
  bool insert(Vector v);
  /// Residue of v after eliminating every pivot coordinate. The residue is
  /// zero iff v lies in the subspace; it is the canonical representative of
  /// v modulo the subspace.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }
  const Domain& domain() const noexcept { return domain_; }
  /// Rows sorted by ascending pivot.
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Coordinates that are not pivots, ascending.
  std::vector<std::size_t> free_coordinates() const;

  bool operator==(const RowEchelon& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  /// Subspace inclusion.
  bool is_subspace_of(const RowEchelon& o) const;

 private:
  Domain domain_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solutions of sum_j x_j * columns[j] = target: particular + span(kernel).
struct AffineSolution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// Exact solve. `columns` all have the same length as `target`.
std::optional<AffineSolution> solve(const std::vector<Vector>& columns, const Vector& target);

/// Basis of {x : sum_j x_j * columns[j] = 0}. `rows` is the length of each
/// column.
std::vector<Vector> kernel(const std::vector<Vector>& columns, const Domain& d, std::size_t rows);

RowEchelon span(const Domain& d, std::size_t n, const std::vector<Vector>& vectors);

}  // namespace ufsr
