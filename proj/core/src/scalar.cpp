#include "ufsr/scalar.hpp"

#include <array>
#include <cctype>

#include "ufsr/error.hpp"

namespace ufsr {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_class mod(std::to_string(p));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return std::stoull(r.get_str());
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Domain Domain::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("prime field modulus " + std::to_string(p) + " is not prime");
  return Domain(DomainKind::PrimeField, p);
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::Rational: return "Q";
    case DomainKind::Integer: return "Z";
    case DomainKind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

Scalar Scalar::from_int(Domain d, long long v) { return from_integer(d, mpz_class(std::to_string(v))); }

Scalar Scalar::from_integer(Domain d, const mpz_class& v) {
  switch (d.kind()) {
    case DomainKind::Rational: return Scalar(d, mpq_class(v));
    case DomainKind::Integer: return Scalar(d, v);
    case DomainKind::PrimeField: return Scalar(d, reduce_mpz(v, d.characteristic()));
  }
  throw DomainError("unknown domain");
}

Scalar Scalar::fraction(Domain d, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  switch (d.kind()) {
    case DomainKind::Rational: {
      mpq_class q(num, den);
      q.canonicalize();
      return Scalar(d, q);
    }
    case DomainKind::Integer: {
      if (num % den != 0) throw DomainError("fraction is not an integer");
      return Scalar(d, mpz_class(num / den));
    }
    case DomainKind::PrimeField:
      return from_integer(d, num) * from_integer(d, den).inverse();
  }
  throw DomainError("unknown domain");
}

Scalar Scalar::parse(Domain d, std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t num_end = digits(i);
  if (num_end == i) throw ParseError("expected digits in scalar literal", i);
  mpz_class num(std::string(text.substr(i, num_end - i)));
  if (negative) num = -num;
  if (num_end == text.size()) return from_integer(d, num);
  if (text[num_end] != '/') throw ParseError("unexpected character in scalar literal", num_end);
  if (d.kind() != DomainKind::Rational)
    throw ParseError("fraction literal not allowed over " + d.name(), num_end);
  std::size_t den_begin = num_end + 1;
  if (den_begin >= text.size() || text[den_begin] < '1' || text[den_begin] > '9')
    throw ParseError("denominator must match [1-9][0-9]*", den_begin);
  std::size_t den_end = digits(den_begin);
  if (den_end != text.size()) throw ParseError("unexpected character in scalar literal", den_end);
  return fraction(d, num, mpz_class(std::string(text.substr(den_begin))));
}

void Scalar::require_same(const Scalar& o) const {
  if (!(domain_ == o.domain_))
    throw DomainError("scalar domain mismatch: " + domain_.name() + " vs " + o.domain_.name());
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v == 0; }, value_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& v) { return v == 1; }, value_);
}

bool Scalar::is_negative() const {
  switch (domain_.kind()) {
    case DomainKind::Rational: return std::get<mpq_class>(value_) < 0;
    case DomainKind::Integer: return std::get<mpz_class>(value_) < 0;
    case DomainKind::PrimeField: return false;
  }
  return false;
}

std::uint64_t Scalar::residue() const {
  if (domain_.kind() != DomainKind::PrimeField) throw DomainError("residue() on non prime-field scalar");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (domain_.kind() != DomainKind::Rational) throw DomainError("rational() on non-rational scalar");
  return std::get<mpq_class>(value_);
}

const mpz_class& Scalar::integer() const {
  if (domain_.kind() != DomainKind::Integer) throw DomainError("integer() on non-integer scalar");
  return std::get<mpz_class>(value_);
}

Scalar Scalar::operator-() const {
  switch (domain_.kind()) {
    case DomainKind::Rational: return Scalar(domain_, mpq_class(-std::get<mpq_class>(value_)));
    case DomainKind::Integer: return Scalar(domain_, mpz_class(-std::get<mpz_class>(value_)));
    case DomainKind::PrimeField: {
      std::uint64_t r = std::get<std::uint64_t>(value_);
      return Scalar(domain_, r == 0 ? 0 : domain_.characteristic() - r);
    }
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  switch (domain_.kind()) {
    case DomainKind::Rational: std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_); break;
    case DomainKind::Integer: std::get<mpz_class>(value_) += std::get<mpz_class>(o.value_); break;
    case DomainKind::PrimeField: {
      auto& r = std::get<std::uint64_t>(value_);
      const std::uint64_t p = domain_.characteristic();
      r = static_cast<std::uint64_t>((static_cast<u128>(r) + std::get<std::uint64_t>(o.value_)) % p);
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  switch (domain_.kind()) {
    case DomainKind::Rational: std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_); break;
    case DomainKind::Integer: std::get<mpz_class>(value_) *= std::get<mpz_class>(o.value_); break;
    case DomainKind::PrimeField: {
      auto& r = std::get<std::uint64_t>(value_);
      r = mul_mod(r, std::get<std::uint64_t>(o.value_), domain_.characteristic());
      break;
    }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertible("inverse of zero");
  switch (domain_.kind()) {
    case DomainKind::Rational: return Scalar(domain_, mpq_class(1 / std::get<mpq_class>(value_)));
    case DomainKind::Integer: {
      const auto& v = std::get<mpz_class>(value_);
      if (v == 1 || v == -1) return *this;
      throw NotInvertible(v.get_str() + " is not invertible in Z");
    }
    case DomainKind::PrimeField: {
      const std::uint64_t p = domain_.characteristic();
      return Scalar(domain_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
    }
  }
  throw DomainError("unknown domain");
}

Scalar Scalar::abs() const { return is_negative() ? -*this : *this; }

bool Scalar::operator==(const Scalar& o) const { return domain_ == o.domain_ && value_ == o.value_; }

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  require_same(o);
  switch (domain_.kind()) {
    case DomainKind::Rational: {
      int c = cmp(std::get<mpq_class>(value_), std::get<mpq_class>(o.value_));
      return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case DomainKind::Integer: {
      int c = cmp(std::get<mpz_class>(value_), std::get<mpz_class>(o.value_));
      return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case DomainKind::PrimeField: return std::get<std::uint64_t>(value_) <=> std::get<std::uint64_t>(o.value_);
  }
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  switch (domain_.kind()) {
    case DomainKind::Rational: return std::get<mpq_class>(value_).get_str();
    case DomainKind::Integer: return std::get<mpz_class>(value_).get_str();
    case DomainKind::PrimeField: return std::to_string(std::get<std::uint64_t>(value_));
  }
  return "?";
}

Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Neg: return -a;
  }
  throw DomainError("unknown arithmetic op");
}

Scalar scalar_invert(const Scalar& a) { return a.inverse(); }

}  // namespace ufsr
