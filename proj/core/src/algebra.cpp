#include "ufsr/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "ufsr/error.hpp"

namespace ufsr {

std::optional<std::size_t> Superalgebra::generator_index(std::string_view name) const {
  const auto& g = spec_.odd_generators;
  auto it = std::find(g.begin(), g.end(), name);
  if (it == g.end()) return std::nullopt;
  return static_cast<std::size_t>(it - g.begin());
}

std::optional<std::size_t> Superalgebra::basis_index(Mask m) const {
  if (m >= free_pos_.size()) return std::nullopt;
  const auto r = reduced_index_of_free_[free_pos_[m]];
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

Vector Superalgebra::reduce_free(Vector free) const {
  free = ideal_.reduce(std::move(free));
  Vector out = zero_vector(field(), dim());
  for (std::size_t pos = 0; pos < free.size(); ++pos) {
    if (free[pos].is_zero()) continue;
    out[static_cast<std::size_t>(reduced_index_of_free_[pos])] = free[pos];
  }
  return out;
}

std::string Superalgebra::monomial_name(Mask m) const {
  if (m == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < num_generators(); ++i) {
    if (!(m >> i & 1u)) continue;
    if (!out.empty()) out += '*';
    out += spec_.odd_generators[i];
  }
  return out;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// m * v in the free exterior algebra (coordinates in free order).
Vector left_multiply_free(const Superalgebra& alg, Mask m, const Vector& v) {
  Vector out = zero_vector(alg.field(), alg.free_dim());
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (v[pos].is_zero()) continue;
    const Mask s = alg.free_monomial(pos);
    const int sign = koszul_sign(m, s);
    if (sign == 0) continue;
    auto& slot = out[alg.free_position(m | s)];
    if (sign > 0) {
      slot += v[pos];
    } else {
      slot -= v[pos];
    }
  }
  return out;
}

}  // namespace

AlgebraPtr build_algebra(const AlgebraSpec& spec) {
  const std::size_t n = spec.odd_generators.size();
  if (n == 0) throw SpecError("at least one odd generator is required");
  if (n > Superalgebra::kMaxGenerators)
    throw SpecError("at most " + std::to_string(Superalgebra::kMaxGenerators) + " odd generators are supported");
  if (!spec.field.is_field()) throw SpecError("base ring must be a field (Q or F_p)");
  std::set<std::string> seen;
  for (const auto& g : spec.odd_generators) {
    if (!valid_identifier(g)) throw SpecError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw SpecError("duplicate generator name '" + g + "'");
  }

  auto alg = std::shared_ptr<Superalgebra>(new Superalgebra());
  alg->spec_ = spec;
  const std::size_t free_dim = std::size_t{1} << n;
  alg->free_order_.resize(free_dim);
  std::iota(alg->free_order_.begin(), alg->free_order_.end(), Mask{0});
  std::sort(alg->free_order_.begin(), alg->free_order_.end(), monomial_less);
  alg->free_pos_.resize(free_dim);
  for (std::size_t pos = 0; pos < free_dim; ++pos) alg->free_pos_[alg->free_order_[pos]] = pos;

  // With an empty ideal the reduced basis is the free basis, which lets the
  // element parser read relations.
  alg->ideal_ = RowEchelon(spec.field, free_dim);
  alg->basis_ = alg->free_order_;
  alg->reduced_index_of_free_.resize(free_dim);
  std::iota(alg->reduced_index_of_free_.begin(), alg->reduced_index_of_free_.end(), std::ptrdiff_t{0});

  std::vector<Vector> relations;
  for (std::size_t r = 0; r < spec.relations.size(); ++r) {
    Element rel = Element::zero(alg);
    try {
      rel = parse_element(alg, spec.relations[r]);
    } catch (const ParseError& e) {
      throw SpecError("relation " + std::to_string(r) + " ('" + spec.relations[r] + "'): " + e.what());
    }
    if (!rel.is_homogeneous())
      throw SpecError("relation " + std::to_string(r) + " ('" + spec.relations[r] + "') is not parity-homogeneous");
    if (!rel.is_zero()) relations.push_back(rel.coeffs());
  }

  RowEchelon ideal(spec.field, free_dim);
  for (const auto& rel : relations) {
    for (Mask m = 0; m < free_dim; ++m) ideal.insert(left_multiply_free(*alg, m, rel));
  }
  Vector one = zero_vector(spec.field, free_dim);
  one[0] = Scalar::one(spec.field);
  if (ideal.contains(one)) throw SpecError("relations generate the unit ideal (trivial quotient)");

  alg->ideal_ = std::move(ideal);
  alg->ideal_dims_ = {};
  for (auto pivot : alg->ideal_.pivots()) {
    if (mask_parity(alg->free_order_[pivot])) {
      ++alg->ideal_dims_.odd;
    } else {
      ++alg->ideal_dims_.even;
    }
  }

  alg->basis_.clear();
  std::fill(alg->reduced_index_of_free_.begin(), alg->reduced_index_of_free_.end(), -1);
  for (std::size_t pos : alg->ideal_.free_coordinates()) {
    alg->reduced_index_of_free_[pos] = static_cast<std::ptrdiff_t>(alg->basis_.size());
    alg->basis_.push_back(alg->free_order_[pos]);
  }
  alg->dims_ = {};
  for (Mask m : alg->basis_) {
    if (mask_parity(m)) {
      ++alg->dims_.odd;
    } else {
      ++alg->dims_.even;
    }
  }

  const std::size_t d = alg->basis_.size();
  alg->table_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Mask a = alg->basis_[i], b = alg->basis_[j];
      const int sign = koszul_sign(a, b);
      if (sign == 0) continue;
      Vector free = zero_vector(spec.field, free_dim);
      free[alg->free_pos_[a | b]] = Scalar::from_int(spec.field, sign);
      Vector reduced = alg->reduce_free(std::move(free));
      auto& entry = alg->table_[i * d + j];
      for (std::size_t k = 0; k < d; ++k) {
        if (!reduced[k].is_zero()) entry.emplace_back(k, reduced[k]);
      }
    }
  }
  return alg;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(AlgebraPtr algebra, Vector coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_->dim()) throw DomainError("coefficient vector does not match algebra dimension");
}

Element Element::zero(const AlgebraPtr& a) { return Element(a, zero_vector(a->field(), a->dim())); }

Element Element::one(const AlgebraPtr& a) { return scalar(a, Scalar::one(a->field())); }

Element Element::scalar(const AlgebraPtr& a, const Scalar& c) {
  Vector v = zero_vector(a->field(), a->dim());
  v[0] = c;
  return Element(a, std::move(v));
}

Element Element::generator(const AlgebraPtr& a, std::size_t i) {
  if (i >= a->num_generators()) throw DomainError("generator index out of range");
  Vector free = zero_vector(a->field(), a->free_dim());
  free[a->free_position(Mask{1} << i)] = Scalar::one(a->field());
  return Element(a, a->reduce_free(std::move(free)));
}

Element Element::basis_element(const AlgebraPtr& a, std::size_t i) {
  Vector v = zero_vector(a->field(), a->dim());
  v.at(i) = Scalar::one(a->field());
  return Element(a, std::move(v));
}

const Domain& Element::field() const { return algebra_->field(); }

bool Element::is_zero() const { return is_zero_vector(coeffs_); }

std::optional<int> Element::parity() const {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    (algebra_->basis_parity(i) ? odd : even) = true;
  }
  if (even == odd) return std::nullopt;
  return odd ? 1 : 0;
}

bool Element::is_homogeneous() const { return is_zero() || parity().has_value(); }

Element Element::even_part() const {
  Vector v = coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (algebra_->basis_parity(i)) v[i] = Scalar::zero(field());
  }
  return Element(algebra_, std::move(v));
}

Element Element::odd_part() const {
  Vector v = coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!algebra_->basis_parity(i)) v[i] = Scalar::zero(field());
  }
  return Element(algebra_, std::move(v));
}

void Element::require_same(const Element& o) const {
  if (algebra_ != o.algebra_) throw DomainError("elements belong to different algebras");
}

Element Element::operator-() const {
  Vector v = coeffs_;
  for (auto& c : v) c = -c;
  return Element(algebra_, std::move(v));
}

Element& Element::operator+=(const Element& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.require_same(b);
  const auto& alg = *a.algebra_;
  const std::size_t d = alg.dim();
  Vector out = zero_vector(alg.field(), d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      const auto& entry = alg.product_of_basis(i, j);
      if (entry.empty()) continue;
      const Scalar ab = a.coeffs_[i] * b.coeffs_[j];
      for (const auto& [k, c] : entry) out[k] += ab * c;
    }
  }
  return Element(a.algebra_, std::move(out));
}

Element operator*(const Scalar& c, const Element& a) {
  Vector v = a.coeffs_;
  for (auto& x : v) x *= c;
  return Element(a.algebra_, std::move(v));
}

Element Element::pow(unsigned k) const {
  Element result = one(algebra_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

bool Element::operator==(const Element& o) const { return algebra_ == o.algebra_ && coeffs_ == o.coeffs_; }

bool Element::operator<(const Element& o) const {
  require_same(o);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == o.coeffs_[i]) continue;
    return coeffs_[i] < o.coeffs_[i];
  }
  return false;
}

std::string Element::to_string() const { return format_element(*this); }

Element multiply(const Element& a, const Element& b) { return a * b; }

Element add_scale(const Element& a, const Scalar& c, const Element& b) { return a + c * b; }

std::pair<Element, Element> parity_decompose(const Element& a) { return {a.even_part(), a.odd_part()}; }

// ---------------------------------------------------------------------------
// Enumeration

ElementEnumeration::ElementEnumeration(AlgebraPtr algebra) : algebra_(std::move(algebra)), size_(1) {
  if (!algebra_->field().is_finite()) throw Unsupported("element enumeration needs a finite base field");
  const std::uint64_t q = algebra_->field().characteristic();
  for (std::size_t i = 0; i < algebra_->dim(); ++i) {
    if (size_ > (std::uint64_t{1} << 62) / q) throw Unsupported("algebra has too many elements to enumerate");
    size_ *= q;
  }
}

Element ElementEnumeration::at(std::uint64_t index) const {
  const Domain& d = algebra_->field();
  const std::uint64_t q = d.characteristic();
  Vector v = zero_vector(d, algebra_->dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = Scalar::from_int(d, static_cast<long long>(index % q));
    index /= q;
  }
  return Element(algebra_, std::move(v));
}

std::uint64_t ElementEnumeration::index_of(const Element& e) const {
  const std::uint64_t q = algebra_->field().characteristic();
  std::uint64_t idx = 0;
  for (std::size_t i = e.coeffs().size(); i-- > 0;) idx = idx * q + e.coeff(i).residue();
  return idx;
}

ElementEnumeration enumerate_elements(const AlgebraPtr& algebra) { return ElementEnumeration(algebra); }

}  // namespace ufsr
