#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ufsr/monomial.hpp"
#include "ufsr/scalar.hpp"

namespace ufsr {

/// Variables of K[X_1..X_s | theta_1..theta_d]; K may also be Z.
struct SuperPolyContext {
  Domain base = Domain::rationals();
  std::vector<std::string> even_vars;
  std::vector<std::string> odd_vars;

  bool operator==(const SuperPolyContext&) const = default;
};
using SuperPolyContextPtr = std::shared_ptr<const SuperPolyContext>;

/// Throws SpecError on empty, duplicate or malformed names, or more than 31
/// odd variables.
SuperPolyContextPtr make_superpoly_context(Domain base, std::vector<std::string> even_vars,
                                           std::vector<std::string> odd_vars);

/// X^e * theta_mask.
struct SuperMonomial {
  std::vector<unsigned> exponents;
  Mask mask = 0;

  unsigned even_degree() const;
  /// Odd mask by the exterior monomial order, then even degree, then
  /// exponents lexicographically.
  bool operator<(const SuperMonomial& o) const;
  bool operator==(const SuperMonomial&) const = default;
};

class SuperPolynomial {
 public:
  explicit SuperPolynomial(SuperPolyContextPtr ctx) : ctx_(std::move(ctx)) {}

  static SuperPolynomial constant(const SuperPolyContextPtr& ctx, const Scalar& c);
  static SuperPolynomial constant(const SuperPolyContextPtr& ctx, long long c);
  static SuperPolynomial even_var(const SuperPolyContextPtr& ctx, std::size_t i);
  static SuperPolynomial odd_var(const SuperPolyContextPtr& ctx, std::size_t i);

  const SuperPolyContextPtr& context() const noexcept { return ctx_; }
  const std::map<SuperMonomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const SuperMonomial& m) const;
  /// Constant coefficient.
  Scalar constant_term() const;
  /// Theta-free part f_0 in K[X].
  SuperPolynomial body() const;

  /// Adds c * m, dropping zero coefficients.
  void add_term(const SuperMonomial& m, const Scalar& c);

  SuperPolynomial operator-() const;
  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator*(const Scalar& c, const SuperPolynomial& a);
  bool operator==(const SuperPolynomial& o) const;

  /// Body first, then even theta-monomials, then odd ones.
  std::string to_string() const;

 private:
  void require_same(const SuperPolynomial& o) const;

  SuperPolyContextPtr ctx_;
  std::map<SuperMonomial, Scalar> terms_;
};

SuperPolynomial spoly_multiply(const SuperPolynomial& f, const SuperPolynomial& g);
/// Element grammar with powers: factor := name ('^' positive-integer)?.
SuperPolynomial parse_superpoly(const SuperPolyContextPtr& ctx, std::string_view text);

/// The body is a nonzero constant (over Z: +1 or -1).
bool spoly_is_unit(const SuperPolynomial& f);
/// Geometric series in the nilpotent part. Throws NotInvertible.
SuperPolynomial spoly_invert(const SuperPolynomial& f);

// --- Dual integers Z[eps] ---------------------------------------------------

/// Z[eps] with the odd generator named "eps".
SuperPolyContextPtr zeps_context();
SuperPolynomial zeps(const SuperPolyContextPtr& ctx, const mpz_class& a, const mpz_class& b);
/// (a, b) for a + b eps. Throws DomainError if f is outside Z[eps].
std::pair<mpz_class, mpz_class> zeps_parts(const SuperPolynomial& f);

/// a + b eps ~ a' + b' eps iff a' = s a and b' = s b + t a for a sign s and
/// an integer t.
bool zeps_are_associates(const SuperPolynomial& f, const SuperPolynomial& g);
/// Exact: b eps is irreducible iff |b| = 1; for a != 0, a + b eps is
/// reducible iff a = m n with |m|, |n| >= 2 and gcd(m, n) | b. Throws
/// PreconditionError for zero and units.
bool zeps_is_irreducible(const SuperPolynomial& f);
/// Not a zerodivisor.
bool zeps_is_regular(const SuperPolynomial& f);

struct ZintDemoReport {
  std::uint64_t p = 0;
  SuperPolynomial square;
  /// (p - eps)(p + eps) and (p - p eps)(p + p eps).
  std::vector<std::vector<SuperPolynomial>> factorizations;
  bool products_ok = false;
  bool factors_irreducible = false;
  bool factors_regular = false;
  /// Every factor of the first factorization against every factor of the second.
  std::vector<bool> cross_associate;
  bool uniqueness_fails = false;
};

/// Throws DomainError for composite p.
ZintDemoReport zint_demo_p_squared(std::uint64_t p);

}  // namespace ufsr
