#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace ufsr {

enum class DomainKind { Rational, PrimeField, Integer };

/// Coefficient domain: the rationals, a prime field F_p, or the integers.
class Domain {
 public:
  static Domain rationals() noexcept { return Domain(DomainKind::Rational, 0); }
  /// Throws DomainError unless p is prime (p = 2 is allowed).
  static Domain prime_field(std::uint64_t p);
  static Domain integers() noexcept { return Domain(DomainKind::Integer, 0); }

  DomainKind kind() const noexcept { return kind_; }
  /// p for F_p, 0 otherwise.
  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != DomainKind::Integer; }
  bool is_finite() const noexcept { return kind_ == DomainKind::PrimeField; }

  /// "Q", "Z" or "F<p>".
  std::string name() const;

  bool operator==(const Domain&) const = default;

 private:
  Domain(DomainKind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

  DomainKind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact scalar in canonical form. Equality is representation equality:
/// rationals are reduced with positive denominator, residues lie in [0, p).
class Scalar {
 public:
  /// Zero of the rationals; exists so containers can default-construct.
  Scalar() : domain_(Domain::rationals()), value_(mpq_class(0)) {}

  static Scalar zero(Domain d) { return from_int(d, 0); }
  static Scalar one(Domain d) { return from_int(d, 1); }
  static Scalar from_int(Domain d, long long v);
  static Scalar from_integer(Domain d, const mpz_class& v);
  /// num/den over Q (den != 0). Over F_p the fraction is mapped through the
  /// inverse of den; over Z den must divide num.
  static Scalar fraction(Domain d, const mpz_class& num, const mpz_class& den);
  /// Literal grammar: `-?[0-9]+` or `-?[0-9]+/[1-9][0-9]*`. Fractions are only
  /// accepted over Q. Throws ParseError (position relative to `text`).
  static Scalar parse(Domain d, std::string_view text);

  const Domain& domain() const noexcept { return domain_; }
  bool is_zero() const;
  bool is_one() const;
  /// True for rationals/integers below zero; residues are never negative.
  bool is_negative() const;

  std::uint64_t residue() const;         // PrimeField only
  const mpq_class& rational() const;     // Rational only
  const mpz_class& integer() const;      // Integer only

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Multiplicative inverse. NotInvertible for zero, or over Z for values
  /// other than +-1.
  Scalar inverse() const;
  Scalar abs() const;

  bool operator==(const Scalar& o) const;
  /// Total order within one domain (numeric for Q/Z, residue order for F_p).
  std::strong_ordering operator<=>(const Scalar& o) const;

  std::string to_string() const;

 private:
  Scalar(Domain d, std::variant<mpq_class, std::uint64_t, mpz_class> v)
      : domain_(d), value_(std::move(v)) {}
  void require_same(const Scalar& o) const;

  Domain domain_;
  std::variant<mpq_class, std::uint64_t, mpz_class> value_;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// Binary arithmetic in one domain; `Neg` ignores `b`. Throws DomainError on
/// mismatched domains.
Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b);
Scalar scalar_invert(const Scalar& a);

}  // namespace ufsr
