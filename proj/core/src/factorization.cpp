#include "ufsr/factorization.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ufsr/error.hpp"
#include "ufsr/exhaustive.hpp"
#include "ufsr/structure.hpp"

namespace ufsr {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Undecided: return "undecided";
  }
  return "?";
}

std::string to_string(UfsrStatus s) {
  switch (s) {
    case UfsrStatus::Ufsr: return "UFSR";
    case UfsrStatus::NotUfsr: return "NotUFSR";
    case UfsrStatus::Undecided: return "Undecided";
  }
  return "?";
}

std::string to_string(UfsrMethod m) { return m == UfsrMethod::Exhaustive ? "exhaustive" : "structural"; }

std::string to_string(UfsrScope s) {
  switch (s) {
    case UfsrScope::Full: return "full";
    case UfsrScope::Homogeneous: return "homogeneous";
    case UfsrScope::Even: return "even";
  }
  return "?";
}

namespace {

void require_same(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra()) throw DomainError("elements belong to different algebras");
}

/// R, or R_0 when working inside the even part.
struct Universe {
  AlgebraPtr alg;
  std::vector<std::size_t> coords;
  bool even_only = false;

  static Universe full(const AlgebraPtr& a) {
    Universe u{a, {}, false};
    for (std::size_t i = 0; i < a->dim(); ++i) u.coords.push_back(i);
    return u;
  }
  static Universe even(const AlgebraPtr& a) {
    Universe u{a, {}, true};
    for (std::size_t i = 0; i < a->dim(); ++i) {
      if (a->basis_parity(i) == 0) u.coords.push_back(i);
    }
    return u;
  }
  /// Non-constant coordinates: the maximal ideal of the universe.
  std::vector<std::size_t> maximal() const { return {coords.begin() + 1, coords.end()}; }
  bool contains(const Element& e) const { return !even_only || e.odd_part().is_zero(); }
};

Element basis(const AlgebraPtr& a, std::size_t j) { return Element::basis_element(a, j); }

/// Solutions y supported on `unknowns` of b * y = target, or y * b = target.
std::optional<AffineSolution> solve_product(const Element& b, const Element& target,
                                            const std::vector<std::size_t>& unknowns, bool b_on_left) {
  std::vector<Vector> columns;
  columns.reserve(unknowns.size());
  for (auto j : unknowns) {
    const Element e = basis(b.algebra(), j);
    columns.push_back((b_on_left ? b * e : e * b).coeffs());
  }
  return solve(columns, target.coeffs());
}

Element embed(const AlgebraPtr& alg, const std::vector<std::size_t>& unknowns, const Vector& y) {
  Vector v = zero_vector(alg->field(), alg->dim());
  for (std::size_t k = 0; k < unknowns.size(); ++k) v[unknowns[k]] = y[k];
  return Element(alg, std::move(v));
}

/// A member of the affine solution set with nonzero constant term, if any.
/// `unknowns[0]` must be the constant coordinate.
std::optional<Vector> unit_solution(const AffineSolution& sol) {
  if (!sol.particular[0].is_zero()) return sol.particular;
  for (const auto& k : sol.kernel) {
    if (k[0].is_zero()) continue;
    Vector v = sol.particular;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += k[i];
    return v;
  }
  return std::nullopt;
}

RowEchelon right_image(const Element& a, const Universe& u) {
  RowEchelon s(a.field(), a.algebra()->dim());
  for (auto j : u.coords) s.insert((a * basis(a.algebra(), j)).coeffs());
  return s;
}

RowEchelon left_image(const Element& a, const Universe& u) {
  RowEchelon s(a.field(), a.algebra()->dim());
  for (auto j : u.coords) s.insert((basis(a.algebra(), j) * a).coeffs());
  return s;
}

RowEchelon maximal_square(const Universe& u) {
  RowEchelon s(u.alg->field(), u.alg->dim());
  for (auto i : u.maximal()) {
    for (auto j : u.maximal()) s.insert((basis(u.alg, i) * basis(u.alg, j)).coeffs());
  }
  return s;
}

bool is_unit_element(const Element& a) { return !a.constant_term().is_zero(); }

bool normal_in(const Universe& u, const Element& a) { return left_image(a, u) == right_image(a, u); }

/// Signed single and paired basis patterns over the given coordinates.
std::vector<Element> sweep_patterns(const AlgebraPtr& alg, const std::vector<std::size_t>& coords) {
  std::vector<Element> out;
  const Domain& d = alg->field();
  const Scalar one = Scalar::one(d), minus = -one;
  auto push = [&](Element e) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
  };
  for (const Scalar& s : {one, minus}) {
    for (auto i : coords) push(s * basis(alg, i));
  }
  for (const auto& [s, t] : {std::pair{one, one}, {one, minus}, {minus, one}, {minus, minus}}) {
    for (std::size_t x = 0; x < coords.size(); ++x) {
      for (std::size_t y = x + 1; y < coords.size(); ++y)
        push(s * basis(alg, coords[x]) + t * basis(alg, coords[y]));
    }
  }
  return out;
}

Tri irreducible_in(const Universe& u, const Element& a) {
  if (a.is_zero() || is_unit_element(a)) throw PreconditionError("irreducibility is defined for nonzero non-units");
  if (!maximal_square(u).contains(a.coeffs())) return Tri::True;
  const auto m = u.maximal();
  bool reducible = false;
  auto try_b = [&](const Element& b) {
    if (b.is_zero()) return true;
    if (solve_product(b, a, m, true)) {
      reducible = true;
      return false;
    }
    return true;
  };
  if (u.alg->field().is_finite()) {
    for_each_in_coordinates(u.alg, m, try_b);
    return reducible ? Tri::False : Tri::True;
  }
  for (const auto& b : sweep_patterns(u.alg, m)) {
    if (!try_b(b)) break;
  }
  return reducible ? Tri::False : Tri::Undecided;
}

std::optional<AssociateCertificate> certificate_in(const Universe& u, const Element& a, const Element& b,
                                                   Tri* status) {
  require_same(a, b);
  const auto& alg = a.algebra();
  auto done = [&](Tri t, std::optional<AssociateCertificate> c = std::nullopt) {
    if (status) *status = t;
    return c;
  };
  const Element one = Element::one(alg);
  if (a == b) return done(Tri::True, AssociateCertificate{one, one});
  if (a.is_zero() || b.is_zero()) return done(Tri::False);
  const bool ua = is_unit_element(a), ub = is_unit_element(b);
  if (ua != ub) return done(Tri::False);
  if (ua) return done(Tri::True, AssociateCertificate{a * invert(b), one});

  if (alg->field().is_finite()) {
    std::optional<AssociateCertificate> found;
    for_each_in_coordinates(alg, u.coords, [&](const Element& w) {
      if (!is_unit_element(w)) return true;
      // a = w^{-1} b v  iff  b v = w a.
      auto sol = solve_product(b, w * a, u.coords, true);
      if (!sol) return true;
      auto v = unit_solution(*sol);
      if (!v) return true;
      found = AssociateCertificate{invert(w), embed(alg, u.coords, *v)};
      return false;
    });
    return done(found ? Tri::True : Tri::False, found);
  }

  // a = u b v with u = u0 + u', v = v0 + v' forces a - u0 v0 b into
  // m b R + R b m.
  RowEchelon w(alg->field(), alg->dim());
  for (auto i : u.maximal()) {
    for (auto j : u.coords) {
      w.insert((basis(alg, i) * b * basis(alg, j)).coeffs());
      w.insert((basis(alg, j) * b * basis(alg, i)).coeffs());
    }
  }
  {
    const Vector rb = w.reduce(b.coeffs());
    const Vector ra = w.reduce(a.coeffs());
    bool feasible;
    if (is_zero_vector(rb)) {
      feasible = is_zero_vector(ra);
    } else {
      auto lambda = solve({rb}, ra);
      feasible = lambda && !lambda->particular[0].is_zero();
    }
    if (!feasible) return done(Tri::False);
  }
  for (bool left : {true, false}) {
    auto sol = solve_product(b, a, u.coords, !left);
    if (!sol) continue;
    if (auto y = unit_solution(*sol)) {
      const Element unit = embed(alg, u.coords, *y);
      return done(Tri::True, left ? AssociateCertificate{unit, one} : AssociateCertificate{one, unit});
    }
  }
  const Scalar s1 = Scalar::one(alg->field());
  for (const Scalar& c : {s1, -s1}) {
    for (auto i : u.maximal()) {
      const Element left = one + c * basis(alg, i);
      auto sol = solve_product(left * b, a, u.coords, true);
      if (!sol) continue;
      if (auto v = unit_solution(*sol)) return done(Tri::True, AssociateCertificate{left, embed(alg, u.coords, *v)});
    }
  }
  return done(Tri::Undecided);
}

Tri associates_in(const Universe& u, const Element& a, const Element& b) {
  Tri t = Tri::Undecided;
  certificate_in(u, a, b, &t);
  return t;
}

/// True if some permutation matches factors into associates, False if no
/// permutation can, Undecided otherwise.
Tri equivalent_in(const Universe& u, const std::vector<Element>& f, const std::vector<Element>& g) {
  if (f.size() != g.size()) return Tri::False;
  const std::size_t n = f.size();
  std::vector<std::vector<Tri>> m(n, std::vector<Tri>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = associates_in(u, f[i], g[j]);
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  bool possible = false;
  do {
    bool all_true = true, none_false = true;
    for (std::size_t i = 0; i < n; ++i) {
      all_true = all_true && m[i][perm[i]] == Tri::True;
      none_false = none_false && m[i][perm[i]] != Tri::False;
    }
    if (all_true) return Tri::True;
    possible = possible || none_false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return possible ? Tri::Undecided : Tri::False;
}

/// Independent search for any factorization into normal irreducibles of the
/// universe. Finite fields only.
bool has_factorization(const Universe& u, const Element& x, unsigned depth, unsigned cap,
                       std::map<Vector, bool>& memo) {
  if (auto it = memo.find(x.coeffs()); it != memo.end()) return it->second;
  if (depth > cap) throw LimitExceeded("factorization search exceeded the cap of " + std::to_string(cap));
  bool result = false;
  if (irreducible_in(u, x) == Tri::True) {
    result = normal_in(u, x);
  } else {
    const auto m = u.maximal();
    for_each_in_coordinates(u.alg, m, [&](const Element& f) {
      if (f.is_zero() || irreducible_in(u, f) != Tri::True || !normal_in(u, f)) return true;
      auto sol = solve_product(f, x, m, true);
      if (!sol) return true;
      // Enumerate the affine solution set through its kernel coordinates.
      const Domain& d = u.alg->field();
      std::vector<std::uint64_t> digits(sol->kernel.size(), 0);
      const std::uint64_t q = d.characteristic();
      while (true) {
        Vector y = sol->particular;
        for (std::size_t i = 0; i < digits.size(); ++i) {
          const Scalar c = Scalar::from_int(d, static_cast<long long>(digits[i]));
          for (std::size_t k = 0; k < y.size(); ++k) y[k] += c * sol->kernel[i][k];
        }
        if (has_factorization(u, embed(u.alg, m, y), depth + 1, cap, memo)) {
          result = true;
          return false;
        }
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
          if (++digits[i] < q) break;
          digits[i] = 0;
        }
        if (i == digits.size()) break;
      }
      return true;
    });
  }
  memo[x.coeffs()] = result;
  return result;
}

UfsrVerdict verdict_from_engine(ExhaustiveFactorizer& ef, const ExhaustiveFactorizer::Verdict& v, UfsrScope scope) {
  UfsrVerdict out;
  out.method = UfsrMethod::Exhaustive;
  out.scope = scope;
  if (v.unique) {
    out.status = UfsrStatus::Ufsr;
    out.reason = "every associate class of nonzero non-units has exactly one factorization";
    return out;
  }
  out.status = UfsrStatus::NotUfsr;
  UfsrWitness w{ef.element(*v.witness), {}};
  for (std::size_t k = 0; k < v.factorizations.size() && k < 2; ++k) {
    Factorization f{w.subject, {}};
    for (auto i : v.factorizations[k].factors) f.factors.push_back(ef.element(i));
    w.factorizations.push_back(std::move(f));
  }
  out.reason = v.factorizations.empty() ? "subject has no factorization into normal irreducibles"
                                        : "subject has " + std::to_string(v.factorizations.size()) +
                                              " inequivalent factorizations";
  out.witness = std::move(w);
  return out;
}

void require_finite(const AlgebraPtr& alg, const char* what) {
  if (!alg->field().is_finite()) throw Unsupported(std::string(what) + " needs a finite base field");
}

}  // namespace

// ---------------------------------------------------------------------------

bool divides(const Element& a, const Element& b) {
  require_same(a, b);
  const auto& alg = a.algebra();
  RowEchelon s(alg->field(), alg->dim());
  if (a.is_homogeneous()) {
    for (std::size_t j = 0; j < alg->dim(); ++j) s.insert((a * basis(alg, j)).coeffs());
  } else {
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      const Element left = basis(alg, i) * a;
      for (std::size_t j = 0; j < alg->dim(); ++j) s.insert((left * basis(alg, j)).coeffs());
    }
  }
  return s.contains(b.coeffs());
}

Tri are_associates_tri(const Element& a, const Element& b) {
  return associates_in(Universe::full(a.algebra()), a, b);
}

std::optional<AssociateCertificate> associate_certificate(const Element& a, const Element& b) {
  return certificate_in(Universe::full(a.algebra()), a, b, nullptr);
}

bool are_associates(const Element& a, const Element& b) {
  const Tri t = are_associates_tri(a, b);
  if (t == Tri::Undecided) throw Unsupported("associate test undecided for " + a.to_string() + " and " + b.to_string());
  return t == Tri::True;
}

bool is_normal(const Element& a) { return normal_in(Universe::full(a.algebra()), a); }

bool is_regular(const Element& a) {
  return right_image(a, Universe::full(a.algebra())).rank() == a.algebra()->dim();
}

bool is_regular_homogeneous_criterion(const Element& a) {
  const auto& alg = a.algebra();
  for (int parity : {0, 1}) {
    std::vector<Vector> columns;
    for (std::size_t j = 0; j < alg->dim(); ++j) {
      if (alg->basis_parity(j) == parity) columns.push_back((a * basis(alg, j)).coeffs());
    }
    if (!kernel(columns, alg->field(), alg->dim()).empty()) return false;
  }
  return true;
}

Tri is_irreducible_tri(const Element& a) { return irreducible_in(Universe::full(a.algebra()), a); }

bool is_irreducible(const Element& a) {
  const Tri t = is_irreducible_tri(a);
  if (t == Tri::Undecided) throw Unsupported("irreducibility undecided for " + a.to_string());
  return t == Tri::True;
}

namespace {

void require_prime_candidate(const Element& p) {
  if (p.is_zero() || is_unit_element(p)) throw PreconditionError("prime elements are nonzero non-units");
  if (!is_normal(p)) throw PreconditionError("prime elements must be normal");
}

}  // namespace

bool is_prime_element(const Element& p) {
  require_prime_candidate(p);
  const auto& alg = p.algebra();
  const RowEchelon pr = right_image(p, Universe::full(alg));
  // A prime ideal is graded; pR must be.
  for (const auto& row : pr.rows()) {
    const Element r(alg, row);
    if (!pr.contains(r.even_part().coeffs())) return false;
  }
  return is_prime_ideal(Ideal::from_generators(alg, {p}));
}

bool is_prime_element_by_definition(const Element& p) {
  require_prime_candidate(p);
  const auto& alg = p.algebra();
  require_finite(alg, "the quantifier prime test");
  const RowEchelon pr = right_image(p, Universe::full(alg));
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < alg->dim(); ++i) (alg->basis_parity(i) ? odd : even).push_back(i);
  std::vector<Element> outside;
  for (const auto* c : {&even, &odd}) {
    for_each_in_coordinates(alg, *c, [&](const Element& e) {
      if (!pr.contains(e.coeffs())) outside.push_back(e);
      return true;
    });
  }
  for (const auto& a : outside) {
    for (const auto& b : outside) {
      if (pr.contains((a * b).coeffs())) return false;
    }
  }
  return true;
}

Element product(const std::vector<Element>& factors) {
  if (factors.empty()) throw DomainError("empty product");
  Element p = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) p = p * factors[i];
  return p;
}

bool equivalent(const Factorization& f, const Factorization& g) {
  const Tri t = equivalent_in(Universe::full(f.subject.algebra()), f.factors, g.factors);
  if (t == Tri::Undecided) throw Unsupported("factorization equivalence undecided");
  return t == Tri::True;
}

std::vector<Factorization> factorizations(const Element& x, unsigned cap) {
  require_finite(x.algebra(), "factorization enumeration");
  ExhaustiveFactorizer ef(x.algebra(), FactorScope::Full, cap);
  std::vector<Factorization> out;
  for (const auto& e : ef.factorizations(ef.index_of(x))) {
    Factorization f{x, {}};
    for (auto i : e.factors) f.factors.push_back(ef.element(i));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Factorization> homogeneous_factorizations(const Element& x, unsigned cap) {
  require_finite(x.algebra(), "factorization enumeration");
  ExhaustiveFactorizer ef(x.algebra(), FactorScope::Full, cap);
  std::vector<Factorization> out;
  for (const auto& e : ef.homogeneous_factorizations(ef.index_of(x))) {
    Factorization f{x, {}};
    for (auto i : e.factors) f.factors.push_back(ef.element(i));
    out.push_back(std::move(f));
  }
  return out;
}

UfsrVerdict ufsr_check(const AlgebraPtr& algebra, unsigned cap) {
  require_finite(algebra, "exhaustive ufsr_check");
  ExhaustiveFactorizer ef(algebra, FactorScope::Full, cap);
  return verdict_from_engine(ef, ef.check(), UfsrScope::Full);
}

UfsrVerdict homogeneous_ufsr_check(const AlgebraPtr& algebra, unsigned cap) {
  require_finite(algebra, "homogeneous_ufsr_check");
  ExhaustiveFactorizer ef(algebra, FactorScope::Full, cap);
  return verdict_from_engine(ef, ef.check_homogeneous(), UfsrScope::Homogeneous);
}

UfsrVerdict even_ufsr_check(const AlgebraPtr& algebra, unsigned cap) {
  require_finite(algebra, "even_ufsr_check");
  ExhaustiveFactorizer ef(algebra, FactorScope::Even, cap);
  return verdict_from_engine(ef, ef.check(), UfsrScope::Even);
}

UfsrVerdict structural_ufsr_check(const AlgebraPtr& algebra) {
  UfsrVerdict out;
  out.method = UfsrMethod::Structural;
  const Ideal m = canonical_superideal(algebra);
  const Ideal m2 = ideal_power(m, 2);
  if (m2.is_zero()) {
    out.status = UfsrStatus::Ufsr;
    out.reason = "m^2 = 0: every nonzero non-unit is normal and irreducible, so factorizations have length 1";
    return out;
  }
  const Universe u = Universe::full(algebra);
  std::vector<Element> candidates;
  for (auto& c : sweep_patterns(algebra, u.maximal())) {
    if (!m2.contains(c) && is_normal(c)) candidates.push_back(std::move(c));
  }
  // Elements outside m^2 are irreducible: a product of two non-units lies in m^2.
  std::map<Vector, std::vector<std::pair<std::size_t, std::size_t>>> products;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      const Element p = candidates[i] * candidates[j];
      if (p.is_zero()) continue;
      auto& seen = products[p.coeffs()];
      for (const auto& [k, l] : seen) {
        if (equivalent_in(u, {candidates[i], candidates[j]}, {candidates[k], candidates[l]}) != Tri::False) continue;
        out.status = UfsrStatus::NotUfsr;
        out.reason = "two provably inequivalent factorizations into elements outside m^2";
        out.witness = UfsrWitness{p, {{p, {candidates[k], candidates[l]}}, {p, {candidates[i], candidates[j]}}}};
        return out;
      }
      seen.emplace_back(i, j);
    }
  }
  out.status = UfsrStatus::Undecided;
  out.reason = "m^2 != 0 and the bounded witness search found no collision";
  return out;
}

WitnessReport verify_witness(const UfsrVerdict& verdict) {
  WitnessReport r;
  auto log = [&](std::string line) { r.transcript.push_back(std::move(line)); };
  if (verdict.status != UfsrStatus::NotUfsr || !verdict.witness) {
    log("verdict carries no NotUFSR witness");
    return r;
  }
  const auto& w = *verdict.witness;
  const auto& alg = w.subject.algebra();
  const Universe u = verdict.scope == UfsrScope::Even ? Universe::even(alg) : Universe::full(alg);
  bool ok = true;
  if (w.subject.is_zero() || is_unit_element(w.subject) || !u.contains(w.subject)) {
    log("subject " + w.subject.to_string() + " is not a nonzero non-unit of the ring");
    ok = false;
  }
  for (std::size_t k = 0; k < w.factorizations.size(); ++k) {
    const auto& f = w.factorizations[k];
    const std::string tag = "factorization " + std::to_string(k + 1);
    const bool prod_ok = product(f.factors) == w.subject;
    log(tag + ": product " + (prod_ok ? "equals" : "DIFFERS FROM") + " subject");
    ok = ok && prod_ok;
    for (const auto& g : f.factors) {
      const bool in_u = u.contains(g) && (verdict.scope != UfsrScope::Homogeneous || g.is_homogeneous());
      const bool nonunit = !g.is_zero() && !is_unit_element(g);
      const Tri irr = nonunit ? irreducible_in(u, g) : Tri::False;
      const bool normal = normal_in(u, g);
      log(tag + ": factor " + g.to_string() + " normal=" + (normal ? "true" : "false") + " irreducible=" + to_string(irr));
      ok = ok && in_u && nonunit && normal && irr == Tri::True;
    }
  }
  if (w.factorizations.size() >= 2) {
    const Tri eq = equivalent_in(u, w.factorizations[0].factors, w.factorizations[1].factors);
    log(std::string("factorizations 1 and 2 equivalent: ") + to_string(eq));
    ok = ok && eq == Tri::False;
  } else if (w.factorizations.empty()) {
    if (!alg->field().is_finite()) {
      log("absence of factorizations cannot be rechecked over an infinite field");
      ok = false;
    } else {
      std::map<Vector, bool> memo;
      const bool any = has_factorization(u, w.subject, 0, 16, memo);
      log(std::string("independent search found ") + (any ? "a factorization" : "no factorization"));
      ok = ok && !any;
    }
  } else {
    log("witness lists a single factorization");
    ok = false;
  }
  r.ok = ok;
  return r;
}

// ---------------------------------------------------------------------------
// Regrouping around an even irreducible

RegroupResult regroup_around(const Element& a, const Factorization& x) {
  if (a.is_zero() || a.parity() != 0) throw PreconditionError("regrouping needs a nonzero even element");
  const auto& alg = a.algebra();
  const Element one = Element::one(alg);
  RegroupResult r;
  // f = u a v = a (u v) because even elements are central.
  Element pending = one;
  for (const auto& f : x.factors) {
    if (auto c = associate_certificate(f, a)) {
      ++r.n;
      pending = pending * (c->u * c->v);
    } else {
      r.factors.push_back(pending * f);
      pending = one;
    }
  }
  if (r.factors.empty()) {
    r.unit = pending;
  } else if (!(pending == one)) {
    r.factors.back() = r.factors.back() * pending;
  }
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    if (are_associates_tri(r.factors[i], a) != Tri::False) r.none_associate_to_a = false;
    for (std::size_t j = i + 1; j < r.factors.size(); ++j) {
      if (are_associates_tri(r.factors[i], r.factors[j]) != Tri::False) r.pairwise_non_associate = false;
    }
  }
  return r;
}

RegroupResult annihilator_witness(const Element& a, const Element& x, unsigned cap) {
  require_same(a, x);
  const auto& alg = a.algebra();
  if (a.is_zero() || a.parity() != 0 || is_unit_element(a) || !is_irreducible(a))
    throw PreconditionError("a must be an even irreducible element");
  if (x.is_zero() || !x.is_homogeneous()) throw PreconditionError("x must be nonzero and homogeneous");
  if (!(a * x).is_zero()) throw PreconditionError("a * x must vanish");
  if (ufsr_check(alg, cap).status != UfsrStatus::Ufsr) throw PreconditionError("the algebra is not a UFSR");
  const auto fs = factorizations(x, cap);
  return regroup_around(a, fs.front());
}

std::vector<AnnihilatorPair> annihilator_pairs(const AlgebraPtr& algebra) {
  require_finite(algebra, "annihilator_pairs");
  const Universe e = Universe::even(algebra);
  const std::vector<std::size_t>& even_coords = e.coords;
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    if (algebra->basis_parity(i)) odd.push_back(i);
  }
  const std::vector<std::size_t>& odd_coords = odd;
  std::vector<AnnihilatorPair> out;
  for_each_in_coordinates(algebra, e.maximal(), [&](const Element& a) {
    if (a.is_zero() || is_irreducible_tri(a) != Tri::True) return true;
    for (const auto* coords : {&even_coords, &odd_coords}) {
      for_each_in_coordinates(algebra, *coords, [&](const Element& x) {
        if (!x.is_zero() && (a * x).is_zero()) out.push_back({a, x});
        return true;
      });
    }
    return true;
  });
  return out;
}

}  // namespace ufsr
