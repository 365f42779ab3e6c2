#include "ufsr/superpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "term_parser.hpp"
#include "ufsr/error.hpp"

namespace ufsr {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string join_factors(const SuperPolyContext& ctx, const SuperMonomial& m) {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += '*';
    out += s;
  };
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    add(ctx.even_vars[i] + (m.exponents[i] > 1 ? "^" + std::to_string(m.exponents[i]) : ""));
  }
  for (std::size_t i = 0; i < ctx.odd_vars.size(); ++i) {
    if (m.mask >> i & 1u) add(ctx.odd_vars[i]);
  }
  return out;
}

}  // namespace

SuperPolyContextPtr make_superpoly_context(Domain base, std::vector<std::string> even_vars,
                                           std::vector<std::string> odd_vars) {
  if (odd_vars.size() > 31) throw SpecError("at most 31 odd variables are supported");
  std::set<std::string> seen;
  for (const auto* names : {&even_vars, &odd_vars}) {
    for (const auto& n : *names) {
      if (!valid_name(n)) throw SpecError("invalid variable name '" + n + "'");
      if (!seen.insert(n).second) throw SpecError("duplicate variable name '" + n + "'");
    }
  }
  return std::make_shared<const SuperPolyContext>(SuperPolyContext{base, std::move(even_vars), std::move(odd_vars)});
}

unsigned SuperMonomial::even_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

bool SuperMonomial::operator<(const SuperMonomial& o) const {
  if (mask != o.mask) return monomial_less(mask, o.mask);
  const unsigned da = even_degree(), db = o.even_degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(o.exponents.begin(), o.exponents.end(), exponents.begin(), exponents.end());
}

SuperPolynomial SuperPolynomial::constant(const SuperPolyContextPtr& ctx, const Scalar& c) {
  SuperPolynomial f(ctx);
  f.add_term({std::vector<unsigned>(ctx->even_vars.size(), 0), 0}, c);
  return f;
}

SuperPolynomial SuperPolynomial::constant(const SuperPolyContextPtr& ctx, long long c) {
  return constant(ctx, Scalar::from_int(ctx->base, c));
}

SuperPolynomial SuperPolynomial::even_var(const SuperPolyContextPtr& ctx, std::size_t i) {
  if (i >= ctx->even_vars.size()) throw DomainError("even variable index out of range");
  SuperMonomial m{std::vector<unsigned>(ctx->even_vars.size(), 0), 0};
  m.exponents[i] = 1;
  SuperPolynomial f(ctx);
  f.add_term(m, Scalar::one(ctx->base));
  return f;
}

SuperPolynomial SuperPolynomial::odd_var(const SuperPolyContextPtr& ctx, std::size_t i) {
  if (i >= ctx->odd_vars.size()) throw DomainError("odd variable index out of range");
  SuperPolynomial f(ctx);
  f.add_term({std::vector<unsigned>(ctx->even_vars.size(), 0), Mask{1} << i}, Scalar::one(ctx->base));
  return f;
}

Scalar SuperPolynomial::coefficient(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(ctx_->base) : it->second;
}

Scalar SuperPolynomial::constant_term() const {
  return coefficient({std::vector<unsigned>(ctx_->even_vars.size(), 0), 0});
}

SuperPolynomial SuperPolynomial::body() const {
  SuperPolynomial b(ctx_);
  for (const auto& [m, c] : terms_) {
    if (m.mask == 0) b.terms_.emplace(m, c);
  }
  return b;
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Scalar& c) {
  if (m.exponents.size() != ctx_->even_vars.size()) throw DomainError("monomial does not match the context");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void SuperPolynomial::require_same(const SuperPolynomial& o) const {
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) throw DomainError("super polynomials from different contexts");
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial out(ctx_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  a.require_same(b);
  SuperPolynomial out(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const int sign = koszul_sign(ma.mask, mb.mask);
      if (sign == 0) continue;
      SuperMonomial m{ma.exponents, ma.mask | mb.mask};
      for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += mb.exponents[i];
      const Scalar c = ca * cb;
      out.add_term(m, sign > 0 ? c : -c);
    }
  }
  return out;
}

SuperPolynomial operator*(const Scalar& c, const SuperPolynomial& a) {
  SuperPolynomial out(a.ctx_);
  for (const auto& [m, x] : a.terms_) out.add_term(m, c * x);
  return out;
}

bool SuperPolynomial::operator==(const SuperPolynomial& o) const {
  return (ctx_ == o.ctx_ || *ctx_ == *o.ctx_) && terms_ == o.terms_;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Body, then even odd-masks, then odd masks; each group in monomial order.
  std::vector<const std::pair<const SuperMonomial, Scalar>*> order;
  for (int group = 0; group < 3; ++group) {
    for (const auto& t : terms_) {
      const int g = t.first.mask == 0 ? 0 : (mask_parity(t.first.mask) == 0 ? 1 : 2);
      if (g == group) order.push_back(&t);
    }
  }
  std::string out;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    const bool neg = c.is_negative();
    const Scalar mag = c.abs();
    const std::string body = join_factors(*ctx_, m);
    std::string term;
    if (body.empty()) {
      term = mag.to_string();
    } else if (mag.is_one()) {
      term = body;
    } else {
      term = mag.to_string() + "*" + body;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

SuperPolynomial spoly_multiply(const SuperPolynomial& f, const SuperPolynomial& g) { return f * g; }

SuperPolynomial parse_superpoly(const SuperPolyContextPtr& ctx, std::string_view text) {
  SuperPolynomial out(ctx);
  for (const auto& term : detail::parse_terms(ctx->base, text, true)) {
    SuperPolynomial t = SuperPolynomial::constant(ctx, term.coefficient);
    for (const auto& f : term.factors) {
      auto ev = std::find(ctx->even_vars.begin(), ctx->even_vars.end(), f.name);
      if (ev != ctx->even_vars.end()) {
        SuperMonomial m{std::vector<unsigned>(ctx->even_vars.size(), 0), 0};
        m.exponents[static_cast<std::size_t>(ev - ctx->even_vars.begin())] = f.exponent;
        SuperPolynomial x(ctx);
        x.add_term(m, Scalar::one(ctx->base));
        t = t * x;
        continue;
      }
      auto od = std::find(ctx->odd_vars.begin(), ctx->odd_vars.end(), f.name);
      if (od == ctx->odd_vars.end()) throw ParseError("unknown variable '" + f.name + "'", f.position);
      const auto theta = SuperPolynomial::odd_var(ctx, static_cast<std::size_t>(od - ctx->odd_vars.begin()));
      // theta^k = 0 for k >= 2.
      t = f.exponent == 1 ? t * theta : SuperPolynomial(ctx);
    }
    out += t;
  }
  return out;
}

bool spoly_is_unit(const SuperPolynomial& f) {
  const SuperPolynomial b = f.body();
  if (b.terms().size() != 1) return false;
  const auto& [m, c] = *b.terms().begin();
  if (m.even_degree() != 0) return false;
  if (f.context()->base.kind() == DomainKind::Integer) return c.abs().is_one();
  return !c.is_zero();
}

SuperPolynomial spoly_invert(const SuperPolynomial& f) {
  if (!spoly_is_unit(f)) throw NotInvertible("super polynomial " + f.to_string() + " is not a unit");
  const auto& ctx = f.context();
  const Scalar inv0 = f.constant_term().inverse();
  const SuperPolynomial one = SuperPolynomial::constant(ctx, 1);
  const SuperPolynomial nu = one - inv0 * f;
  SuperPolynomial sum = one;
  SuperPolynomial power = nu;
  while (!power.is_zero()) {
    sum += power;
    power = power * nu;
  }
  return inv0 * sum;
}

// ---------------------------------------------------------------------------

SuperPolyContextPtr zeps_context() { return make_superpoly_context(Domain::integers(), {}, {"eps"}); }

SuperPolynomial zeps(const SuperPolyContextPtr& ctx, const mpz_class& a, const mpz_class& b) {
  SuperPolynomial f(ctx);
  f.add_term({{}, 0}, Scalar::from_integer(ctx->base, a));
  f.add_term({{}, 1}, Scalar::from_integer(ctx->base, b));
  return f;
}

std::pair<mpz_class, mpz_class> zeps_parts(const SuperPolynomial& f) {
  const auto& ctx = *f.context();
  if (ctx.base.kind() != DomainKind::Integer || !ctx.even_vars.empty() || ctx.odd_vars.size() != 1)
    throw DomainError("not an element of Z[eps]");
  return {f.coefficient({{}, 0}).integer(), f.coefficient({{}, 1}).integer()};
}

bool zeps_are_associates(const SuperPolynomial& f, const SuperPolynomial& g) {
  const auto [a, b] = zeps_parts(f);
  const auto [a2, b2] = zeps_parts(g);
  for (int s : {1, -1}) {
    if (a2 != s * a) continue;
    const mpz_class r = b2 - s * b;
    if (a == 0 ? r == 0 : r % a == 0) return true;
  }
  return false;
}

bool zeps_is_irreducible(const SuperPolynomial& f) {
  const auto [a, b] = zeps_parts(f);
  if (f.is_zero() || spoly_is_unit(f)) throw PreconditionError("irreducibility is defined for nonzero non-units");
  if (a == 0) return abs(b) == 1;
  const mpz_class n = abs(a);
  for (mpz_class m = 2; m * m <= n; ++m) {
    if (n % m != 0) continue;
    mpz_class g;
    mpz_class other = n / m;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), other.get_mpz_t());
    if (b % g == 0) return false;
  }
  return true;
}

bool zeps_is_regular(const SuperPolynomial& f) { return zeps_parts(f).first != 0; }

ZintDemoReport zint_demo_p_squared(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const auto ctx = zeps_context();
  const mpz_class P(std::to_string(p));
  ZintDemoReport r{p, zeps(ctx, P * P, 0), {}, false, false, false, {}, false};
  r.factorizations = {{zeps(ctx, P, -1), zeps(ctx, P, 1)}, {zeps(ctx, P, -P), zeps(ctx, P, P)}};
  r.products_ok = true;
  r.factors_irreducible = true;
  r.factors_regular = true;
  for (const auto& fs : r.factorizations) {
    r.products_ok = r.products_ok && fs[0] * fs[1] == r.square;
    for (const auto& f : fs) {
      r.factors_irreducible = r.factors_irreducible && zeps_is_irreducible(f);
      r.factors_regular = r.factors_regular && zeps_is_regular(f);
    }
  }
  for (const auto& f : r.factorizations[0]) {
    for (const auto& g : r.factorizations[1]) r.cross_associate.push_back(zeps_are_associates(f, g));
  }
  const bool any_assoc = std::any_of(r.cross_associate.begin(), r.cross_associate.end(), [](bool b) { return b; });
  r.uniqueness_fails = r.products_ok && r.factors_irreducible && !any_assoc;
  return r;
}

}  // namespace ufsr
