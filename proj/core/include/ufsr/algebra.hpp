#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ufsr/linalg.hpp"
#include "ufsr/monomial.hpp"
#include "ufsr/scalar.hpp"

namespace ufsr {

/// Presentation of Lambda_K[theta_1..theta_n] / (relations).
struct AlgebraSpec {
  Domain field = Domain::rationals();
  std::vector<std::string> odd_generators;
  std::vector<std::string> relations;
};

/// Graded dimensions (even, odd).
struct GradedDims {
  std::size_t even = 0;
  std::size_t odd = 0;
  std::size_t total() const noexcept { return even + odd; }
  bool operator==(const GradedDims&) const = default;
};

class Superalgebra;
using AlgebraPtr = std::shared_ptr<const Superalgebra>;

/// Finite-dimensional supercommutative quotient of an exterior algebra.
/// Immutable after construction.
///
/// Elements are coefficient vectors over the reduced basis: the monomials
/// that are not pivots of the row-reduced relation ideal, where the pivot of a
/// vector is its largest monomial in (degree, mask) order. The reduced basis
/// is sorted in that order, so index 0 is always the unit monomial.
class Superalgebra {
 public:
  static constexpr std::size_t kMaxGenerators = 12;

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const Domain& field() const noexcept { return spec_.field; }
  std::size_t num_generators() const noexcept { return spec_.odd_generators.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return spec_.odd_generators; }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  std::size_t dim() const noexcept { return basis_.size(); }
  GradedDims graded_dims() const noexcept { return dims_; }
  const std::vector<Mask>& basis() const noexcept { return basis_; }
  int basis_parity(std::size_t i) const noexcept { return mask_parity(basis_[i]); }
  std::optional<std::size_t> basis_index(Mask m) const;

  /// The relation ideal I inside the free exterior algebra (2^n coordinates
  /// indexed by free_position()).
  const RowEchelon& relation_ideal() const noexcept { return ideal_; }
  GradedDims relation_ideal_dims() const noexcept { return ideal_dims_; }
  std::size_t free_dim() const noexcept { return free_order_.size(); }
  std::size_t free_position(Mask m) const noexcept { return free_pos_[m]; }
  Mask free_monomial(std::size_t pos) const noexcept { return free_order_[pos]; }

  /// Normal form of a free exterior-algebra vector: coordinates over the
  /// reduced basis.
  Vector reduce_free(Vector free) const;

  /// Structure constants: basis[i] * basis[j] as sparse (index, coefficient).
  const std::vector<std::pair<std::size_t, Scalar>>& product_of_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }

  /// "t1*t2", or "1" for the unit monomial.
  std::string monomial_name(Mask m) const;

 private:
  friend AlgebraPtr build_algebra(const AlgebraSpec& spec);
  Superalgebra() = default;

  AlgebraSpec spec_;
  std::vector<Mask> free_order_;
  std::vector<std::size_t> free_pos_;
  RowEchelon ideal_{Domain::rationals(), 0};
  GradedDims ideal_dims_;
  std::vector<Mask> basis_;
  std::vector<std::ptrdiff_t> reduced_index_of_free_;
  GradedDims dims_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

/// Builds the quotient. Throws SpecError for: no generators, duplicate or
/// malformed names, unparsable or inhomogeneous relations, 1 in I.
AlgebraPtr build_algebra(const AlgebraSpec& spec);

/// Element of a Superalgebra: coefficients over its reduced basis.
class Element {
 public:
  Element(AlgebraPtr algebra, Vector coeffs);

  static Element zero(const AlgebraPtr& a);
  static Element one(const AlgebraPtr& a);
  static Element scalar(const AlgebraPtr& a, const Scalar& c);
  /// theta_{i+1}, reduced.
  static Element generator(const AlgebraPtr& a, std::size_t i);
  static Element basis_element(const AlgebraPtr& a, std::size_t i);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Vector& coeffs() const noexcept { return coeffs_; }
  const Scalar& coeff(std::size_t i) const { return coeffs_[i]; }
  /// Coefficient of the unit monomial (the image in K = R / J_R).
  const Scalar& constant_term() const { return coeffs_[0]; }
  const Domain& field() const;

  bool is_zero() const;
  bool is_homogeneous() const;
  /// 0 or 1 for nonzero homogeneous elements, nullopt otherwise (and for 0).
  std::optional<int> parity() const;
  Element even_part() const;
  Element odd_part() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, const Element& a);
  Element pow(unsigned k) const;

  bool operator==(const Element& o) const;
  /// Lexicographic on coefficients read from the highest basis monomial down.
  bool operator<(const Element& o) const;

  std::string to_string() const;

 private:
  void require_same(const Element& o) const;

  AlgebraPtr algebra_;
  Vector coeffs_;
};

Element multiply(const Element& a, const Element& b);
/// a + c * b.
Element add_scale(const Element& a, const Scalar& c, const Element& b);
/// (even part, odd part).
std::pair<Element, Element> parity_decompose(const Element& a);

/// Grammar: expr := [+|-] term (('+'|'-') term)*;
/// term := scalar ('*' factor)* | factor ('*' factor)*; factor := generator.
Element parse_element(const AlgebraPtr& algebra, std::string_view text);
/// Sorted monomials with canonical signs; parse_element(format_element(a)) == a.
std::string format_element(const Element& a);

/// Enumerates every element of an algebra over a finite field in canonical
/// order. Index i encodes coefficients as base-p digits with the unit
/// monomial in the least significant digit.
class ElementEnumeration {
 public:
  explicit ElementEnumeration(AlgebraPtr algebra);

  std::uint64_t size() const noexcept { return size_; }
  Element at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& e) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using reference = Element;
    using pointer = void;
    iterator(const ElementEnumeration* owner, std::uint64_t i) : owner_(owner), i_(i) {}
    Element operator*() const { return owner_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++i_;
      return old;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const ElementEnumeration* owner_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  AlgebraPtr algebra_;
  std::uint64_t size_;
};

/// Throws Unsupported over Q and when q^dim exceeds 2^62.
ElementEnumeration enumerate_elements(const AlgebraPtr& algebra);

}  // namespace ufsr
