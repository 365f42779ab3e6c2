#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ufsr/algebra.hpp"

namespace ufsr {

/// Dense vector of residues mod p.
using ModVec = std::vector<std::uint32_t>;

/// Row echelon form over F_p with the lowest nonzero coordinate of each row
/// as its pivot, normalized to 1 and cleared from every other row.
class ModEchelon {
 public:
  ModEchelon(std::uint32_t p, std::size_t n) : p_(p), n_(n) {}

  bool insert(ModVec v);
  ModVec reduce(ModVec v) const;
  bool contains(const ModVec& v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<ModVec>& rows() const noexcept { return rows_; }
  /// Concatenated rows; equal keys iff equal subspaces.
  std::vector<std::uint32_t> key() const;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<ModVec> rows_;
  std::vector<std::size_t> pivots_;
};

struct ModAffine {
  ModVec particular;
  std::vector<ModVec> kernel;
};

/// Solutions x of sum_j x_j * columns[j] = target over F_p.
std::optional<ModAffine> mod_solve(std::uint32_t p, const std::vector<ModVec>& columns, const ModVec& target);

/// Structure constants of a Superalgebra over F_p reduced to machine words.
class FiniteRing {
 public:
  explicit FiniteRing(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::uint32_t p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }

  ModVec multiply(const ModVec& a, const ModVec& b) const;
  ModVec to_mod(const Element& e) const;
  Element to_element(const ModVec& v) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inverse(std::uint32_t a) const;

 private:
  AlgebraPtr algebra_;
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> table_;
};

}  // namespace ufsr
