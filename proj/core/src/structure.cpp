#include "ufsr/structure.hpp"

#include <stdexcept>

#include "ufsr/error.hpp"

namespace ufsr {

namespace {

// Exhaustive scans above these sizes fall back to the structural argument.
constexpr std::uint64_t kExhaustiveElementLimit = std::uint64_t{1} << 16;
constexpr std::uint64_t kExhaustivePairLimit = std::uint64_t{1} << 18;

std::uint64_t span_size(const Domain& d, std::size_t coords) {
  std::uint64_t n = 1;
  const std::uint64_t q = d.characteristic();
  for (std::size_t i = 0; i < coords; ++i) {
    if (n > (std::uint64_t{1} << 40) / q) return UINT64_MAX;
    n *= q;
  }
  return n;
}

void require_proper(const Ideal& ideal) {
  if (!ideal.is_proper()) throw PreconditionError("the unit ideal is neither prime nor maximal");
}

}  // namespace

bool for_each_in_coordinates(const AlgebraPtr& algebra, const std::vector<std::size_t>& coords,
                             const std::function<bool(const Element&)>& f) {
  const Domain& d = algebra->field();
  if (!d.is_finite()) throw Unsupported("enumeration needs a finite base field");
  if (span_size(d, coords.size()) == UINT64_MAX) throw Unsupported("subspace too large to enumerate");
  const std::uint64_t q = d.characteristic();
  std::vector<std::uint64_t> digits(coords.size(), 0);
  Vector v = zero_vector(d, algebra->dim());
  while (true) {
    if (!f(Element(algebra, v))) return false;
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < q) {
        v[coords[i]] = Scalar::from_int(d, static_cast<long long>(digits[i]));
        break;
      }
      digits[i] = 0;
      v[coords[i]] = Scalar::zero(d);
    }
    if (i == digits.size()) return true;
  }
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(AlgebraPtr algebra, std::vector<Element> gens, RowEchelon space)
    : algebra_(std::move(algebra)), generators_(std::move(gens)), space_(std::move(space)) {}

Ideal Ideal::from_generators(const AlgebraPtr& algebra, std::vector<Element> gens) {
  const std::size_t d = algebra->dim();
  RowEchelon space(algebra->field(), d);
  std::vector<Element> basis_elems;
  basis_elems.reserve(d);
  for (std::size_t j = 0; j < d; ++j) basis_elems.push_back(Element::basis_element(algebra, j));
  for (const auto& g : gens) {
    if (g.algebra() != algebra) throw DomainError("ideal generator belongs to a different algebra");
    for (const Element& part : {g.even_part(), g.odd_part()}) {
      if (part.is_zero()) continue;
      for (const auto& m : basis_elems) space.insert((part * m).coeffs());
    }
  }
  for (const auto& row : space.rows()) {
    const Element r(algebra, row);
    for (const auto& m : basis_elems) {
      if (!space.contains((m * r).coeffs())) throw std::logic_error("ideal closure is not two-sided");
    }
  }
  return Ideal(algebra, std::move(gens), std::move(space));
}

Ideal Ideal::zero(const AlgebraPtr& algebra) { return from_generators(algebra, {}); }

Ideal Ideal::whole(const AlgebraPtr& algebra) { return from_generators(algebra, {Element::one(algebra)}); }

std::vector<Element> Ideal::basis() const {
  std::vector<Element> out;
  for (const auto& row : space_.rows()) out.emplace_back(algebra_, row);
  return out;
}

std::vector<Element> Ideal::even_basis() const {
  std::vector<Element> out;
  for (std::size_t r = 0; r < space_.rank(); ++r) {
    if (algebra_->basis_parity(space_.pivots()[r]) == 0) out.emplace_back(algebra_, space_.rows()[r]);
  }
  return out;
}

std::vector<Element> Ideal::odd_basis() const {
  std::vector<Element> out;
  for (std::size_t r = 0; r < space_.rank(); ++r) {
    if (algebra_->basis_parity(space_.pivots()[r]) == 1) out.emplace_back(algebra_, space_.rows()[r]);
  }
  return out;
}

GradedDims Ideal::dims() const {
  GradedDims g;
  for (auto p : space_.pivots()) {
    if (algebra_->basis_parity(p)) {
      ++g.odd;
    } else {
      ++g.even;
    }
  }
  return g;
}

bool Ideal::contains(const Element& a) const {
  if (a.algebra() != algebra_) throw DomainError("element belongs to a different algebra");
  return space_.contains(a.coeffs());
}

Element Ideal::reduce(const Element& a) const {
  if (a.algebra() != algebra_) throw DomainError("element belongs to a different algebra");
  return Element(algebra_, space_.reduce(a.coeffs()));
}

bool Ideal::is_proper() const { return !contains(Element::one(algebra_)); }

// ---------------------------------------------------------------------------
// Quotients

Vector QuotientDescription::project(const Element& a) const {
  const Vector r = ideal.reduce(a).coeffs();
  Vector out;
  out.reserve(representatives.size());
  for (auto i : representatives) out.push_back(r[i]);
  return out;
}

QuotientDescription quotient(const Ideal& ideal) {
  QuotientDescription q{ideal.algebra(), ideal, {}, ideal.space().free_coordinates()};
  for (auto i : q.representatives) {
    if (q.source->basis_parity(i)) {
      ++q.residue_dims.odd;
    } else {
      ++q.residue_dims.even;
    }
  }
  return q;
}

Ideal canonical_superideal(const AlgebraPtr& algebra) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    if (algebra->basis_parity(i)) gens.push_back(Element::basis_element(algebra, i));
  }
  return Ideal::from_generators(algebra, std::move(gens));
}

QuotientDescription superreduction(const AlgebraPtr& algebra) { return quotient(canonical_superideal(algebra)); }

// ---------------------------------------------------------------------------
// Units and nilpotents

bool is_nilpotent(const Element& a) {
  Element p = a;
  for (std::size_t k = 1; k <= a.algebra()->dim() + 1; ++k) {
    if (p.is_zero()) return true;
    p = p * a;
  }
  return p.is_zero();
}

bool is_unit(const Element& a) { return !a.constant_term().is_zero(); }

Element invert(const Element& a) {
  if (!is_unit(a)) throw NotInvertible("element " + a.to_string() + " is not a unit (constant term is zero)");
  const auto& alg = a.algebra();
  const Scalar inv0 = a.constant_term().inverse();
  const Element nu = Element::one(alg) - inv0 * a;
  Element sum = Element::one(alg);
  Element power = nu;
  while (!power.is_zero()) {
    sum += power;
    power = power * nu;
  }
  return inv0 * sum;
}

Ideal nilradical(const AlgebraPtr& algebra) {
  const Domain& d = algebra->field();
  if (d.is_finite() && span_size(d, algebra->dim()) <= kExhaustiveElementLimit) {
    RowEchelon nil(d, algebra->dim());
    for (const auto& e : enumerate_elements(algebra)) {
      if (is_nilpotent(e)) nil.insert(e.coeffs());
    }
    std::vector<Element> gens;
    for (const auto& row : nil.rows()) gens.emplace_back(algebra, row);
    Ideal out = Ideal::from_generators(algebra, std::move(gens));
    if (!(out.space() == nil)) throw std::logic_error("nilpotent elements do not form an ideal");
    return out;
  }
  if (!is_superdomain(algebra)) throw Unsupported("nilradical of a non-superdomain over an infinite field");
  return canonical_superideal(algebra);
}

// ---------------------------------------------------------------------------
// Maximal and prime ideals

std::vector<Ideal> maximal_ideals(const AlgebraPtr& algebra) {
  // J_R has residue field K and is nilpotent, so it lies in every maximal
  // ideal and is the only one.
  Ideal j = canonical_superideal(algebra);
  const auto q = quotient(j);
  if (!(q.residue_dims == GradedDims{1, 0}) || !nilpotency_index(j))
    throw std::logic_error("canonical superideal is not a nilpotent ideal of codimension 1|0");
  return {std::move(j)};
}

Ideal jacobson_radical(const AlgebraPtr& algebra) {
  auto maxes = maximal_ideals(algebra);
  RowEchelon meet = maxes.front().space();
  for (std::size_t i = 1; i < maxes.size(); ++i) {
    RowEchelon next(algebra->field(), algebra->dim());
    for (const auto& row : meet.rows()) {
      if (maxes[i].space().contains(row)) next.insert(row);
    }
    meet = std::move(next);
  }
  std::vector<Element> gens;
  for (const auto& row : meet.rows()) gens.emplace_back(algebra, row);
  return Ideal::from_generators(algebra, std::move(gens));
}

bool is_local(const AlgebraPtr& algebra) { return maximal_ideals(algebra).size() == 1; }

std::optional<std::pair<Element, Element>> prime_ideal_counterexample(const Ideal& ideal) {
  require_proper(ideal);
  const auto& alg = ideal.algebra();
  // An odd basis monomial outside the ideal squares to zero.
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    if (!alg->basis_parity(i)) continue;
    Element b = Element::basis_element(alg, i);
    if (!ideal.contains(b)) return std::pair{b, b};
  }
  // Otherwise J_R is contained in the proper ideal, which is then J_R itself,
  // with quotient K.
  return std::nullopt;
}

bool is_prime_ideal_exhaustive(const Ideal& ideal) {
  require_proper(ideal);
  const auto& alg = ideal.algebra();
  if (!alg->field().is_finite()) throw Unsupported("exhaustive primality needs a finite base field");
  const auto q = quotient(ideal);
  std::vector<std::size_t> even, odd;
  for (auto i : q.representatives) (alg->basis_parity(i) ? odd : even).push_back(i);
  std::vector<Element> reps;
  for (const auto* coords : {&even, &odd}) {
    for_each_in_coordinates(alg, *coords, [&](const Element& e) {
      if (!e.is_zero()) reps.push_back(e);
      return true;
    });
  }
  for (const auto& x : reps) {
    for (const auto& y : reps) {
      if (ideal.contains(x * y)) return false;
    }
  }
  return true;
}

bool is_prime_ideal(const Ideal& ideal) {
  require_proper(ideal);
  const auto& alg = ideal.algebra();
  if (alg->field().is_finite()) {
    const auto q = quotient(ideal);
    const std::uint64_t reps =
        span_size(alg->field(), q.residue_dims.even) + span_size(alg->field(), q.residue_dims.odd);
    if (reps <= 1u << 10 && reps * reps <= kExhaustivePairLimit) return is_prime_ideal_exhaustive(ideal);
  }
  return !prime_ideal_counterexample(ideal).has_value();
}

bool is_maximal_ideal_exhaustive(const Ideal& ideal) {
  require_proper(ideal);
  const auto& alg = ideal.algebra();
  if (!alg->field().is_finite()) throw Unsupported("exhaustive maximality needs a finite base field");
  const auto q = quotient(ideal);
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < alg->dim(); ++j) columns.push_back({});
  const Vector one = ideal.reduce(Element::one(alg)).coeffs();
  return for_each_in_coordinates(alg, q.representatives, [&](const Element& x) {
    if (x.is_zero()) return true;
    for (std::size_t j = 0; j < alg->dim(); ++j)
      columns[j] = ideal.reduce(x * Element::basis_element(alg, j)).coeffs();
    return solve(columns, one).has_value();
  });
}

bool is_maximal_ideal(const Ideal& ideal) {
  require_proper(ideal);
  const auto& alg = ideal.algebra();
  if (alg->field().is_finite() && span_size(alg->field(), quotient(ideal).representatives.size()) <= 1u << 12)
    return is_maximal_ideal_exhaustive(ideal);
  // Every element outside J_R is a unit, so each proper ideal lies in J_R.
  return ideal == canonical_superideal(alg);
}

bool is_superdomain(const AlgebraPtr& algebra) { return is_prime_ideal(canonical_superideal(algebra)); }

bool is_superfield(const AlgebraPtr& algebra) { return is_maximal_ideal(canonical_superideal(algebra)); }

// ---------------------------------------------------------------------------
// Powers

Ideal ideal_power(const Ideal& ideal, unsigned k) {
  if (k == 0) throw DomainError("ideal power needs k >= 1");
  const auto& alg = ideal.algebra();
  const auto base = ideal.basis();
  RowEchelon current = ideal.space();
  for (unsigned step = 1; step < k && current.rank() > 0; ++step) {
    RowEchelon next(alg->field(), alg->dim());
    for (const auto& row : current.rows()) {
      const Element r(alg, row);
      for (const auto& b : base) next.insert((r * b).coeffs());
    }
    current = std::move(next);
  }
  std::vector<Element> gens;
  for (const auto& row : current.rows()) gens.emplace_back(alg, row);
  return Ideal(alg, std::move(gens), std::move(current));
}

std::optional<unsigned> nilpotency_index(const Ideal& ideal) {
  const unsigned limit = static_cast<unsigned>(ideal.algebra()->dim()) + 1;
  for (unsigned m = 1; m <= limit; ++m) {
    if (ideal_power(ideal, m).is_zero()) return m;
  }
  return std::nullopt;
}

}  // namespace ufsr
