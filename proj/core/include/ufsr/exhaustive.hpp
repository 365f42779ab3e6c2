#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ufsr/finite_ring.hpp"

namespace ufsr {

/// Which ring the engine works in: R itself, or its even part R_0 (with the
/// units, irreducibles and associates of R_0).
enum class FactorScope { Full, Even };

/// Exhaustive factorization engine for an algebra over a finite field.
///
/// Elements of the universe (R or R_0) are numbered by their coefficients
/// over the universe's basis coordinates, read as base-p digits with the unit
/// monomial least significant. Associate classes of nonzero non-units are
/// numbered by their least member.
class ExhaustiveFactorizer {
 public:
  using Index = std::uint32_t;
  static constexpr Index kNone = UINT32_MAX;
  static constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 20;

  /// One factorization up to equivalence: the sorted associate classes of its
  /// factors, plus a concrete factor sequence whose product is the subject.
  struct Entry {
    std::vector<std::uint32_t> classes;
    std::vector<Index> factors;
  };

  struct Verdict {
    bool unique = true;
    /// First subject (in index order) without exactly one factorization.
    std::optional<Index> witness;
    std::vector<Entry> factorizations;
  };

  ExhaustiveFactorizer(AlgebraPtr algebra, FactorScope scope = FactorScope::Full, unsigned cap = 16);

  const FiniteRing& ring() const noexcept { return ring_; }
  FactorScope scope() const noexcept { return scope_; }
  unsigned cap() const noexcept { return cap_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Basis indices of R spanning the universe.
  const std::vector<std::size_t>& coordinates() const noexcept { return coords_; }

  Element element(Index x) const;
  /// Throws DomainError when e is outside the universe.
  Index index_of(const Element& e) const;
  Index multiply(Index a, Index b) const;
  static constexpr Index one() noexcept { return 1; }

  bool is_unit(Index x) const noexcept { return x % q_ != 0; }
  std::size_t unit_count() const noexcept { return unit_count_; }
  const std::vector<Index>& unit_generators() const noexcept { return generators_; }
  /// Parity of a homogeneous nonzero element, nullopt otherwise.
  std::optional<int> parity(Index x) const;

  std::size_t class_count() const noexcept { return reps_.size(); }
  /// kNone for zero and units.
  std::uint32_t class_of(Index x) const { return class_[x]; }
  Index representative(std::uint32_t cls) const { return reps_[cls]; }
  /// (u, v) with x = u * representative(class_of(x)) * v.
  std::pair<Index, Index> certificate(Index x) const { return {left_[x], right_[x]}; }
  bool associates(Index a, Index b) const;

  bool is_normal(Index x) const;
  bool is_irreducible(Index x) const;
  bool is_normal_irreducible(Index x) const { return is_normal(x) && is_irreducible(x); }
  const std::vector<Index>& normal_irreducibles() const noexcept { return normal_irreducibles_; }

  /// Factorizations of a nonzero non-unit into normal irreducibles, one per
  /// equivalence class, sorted by class key. Throws LimitExceeded past the cap.
  std::vector<Entry> factorizations(Index x);
  /// Same, with subject and factors restricted to homogeneous elements.
  /// Full scope only.
  std::vector<Entry> homogeneous_factorizations(Index x);

  Verdict check();
  Verdict check_homogeneous();

 private:
  ModVec local_vector(Index x) const;
  Index encode_local(const ModVec& v) const;
  ModVec global(Index x) const;
  Index local(const ModVec& g) const;
  std::vector<Index> solve_all(Index f, Index x, const std::vector<std::size_t>& unknown_coords) const;
  std::vector<std::size_t> divisor_spaces(Index x) const;
  Entry transport(const Entry& e, Index u, Index v) const;

  const std::vector<Entry>& class_factorizations(std::uint32_t cls, unsigned depth);
  const std::vector<Entry>& homogeneous_memo(Index x, unsigned depth);

  FiniteRing ring_;
  FactorScope scope_;
  unsigned cap_;
  std::uint32_t q_;
  std::vector<std::size_t> coords_;
  std::vector<int> coord_parity_;
  std::uint64_t size_ = 0;

  std::size_t unit_count_ = 0;
  std::vector<Index> generators_;
  std::vector<std::uint32_t> class_;
  std::vector<Index> left_, right_;
  std::vector<Index> reps_;
  std::vector<bool> class_normal_;
  std::vector<bool> reducible_;
  std::vector<std::uint32_t> space_of_;
  std::vector<ModEchelon> spaces_;
  std::vector<std::vector<Index>> ni_by_space_;
  std::vector<Index> normal_irreducibles_;

  std::vector<std::uint8_t> state_;
  std::vector<std::vector<Entry>> memo_;
  std::map<Index, std::uint8_t> h_state_;
  std::map<Index, std::vector<Entry>> h_memo_;
};

}  // namespace ufsr
