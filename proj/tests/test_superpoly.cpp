#include <doctest.h>

#include <cstdlib>
#include <random>

#include "ufsr/error.hpp"
#include "ufsr/superpoly.hpp"

using namespace ufsr;

namespace {

// Integer-literal convenience over the mpz_class interface.
SuperPolynomial zeps(const SuperPolyContextPtr& ctx, long long a, long long b) {
  return ufsr::zeps(ctx, mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b)));
}

SuperPolyContextPtr qctx() { return make_superpoly_context(Domain::rationals(), {"X", "Y"}, {"t1", "t2", "t3"}); }

SuperPolynomial random_poly(const SuperPolyContextPtr& ctx, std::mt19937_64& rng) {
  SuperPolynomial f(ctx);
  const int terms = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) {
    SuperMonomial m;
    for (std::size_t k = 0; k < ctx->even_vars.size(); ++k) m.exponents.push_back(static_cast<unsigned>(rng() % 3));
    m.mask = static_cast<Mask>(rng() % (Mask{1} << ctx->odd_vars.size()));
    f.add_term(m, Scalar::from_int(ctx->base, static_cast<long long>(rng() % 11) - 5));
  }
  return f;
}

// a + b eps as a product of two non-units, searched in a box.
bool zeps_reducible_brute(long long a, long long b) {
  const long long bound = std::llabs(a) + std::llabs(b) + 2;
  for (long long c = -bound; c <= bound; ++c) {
    for (long long e = -bound; e <= bound; ++e) {
      if (c * e != a || std::llabs(c) == 1 || std::llabs(e) == 1) continue;
      for (long long d = -bound; d <= bound; ++d) {
        for (long long f = -bound; f <= bound; ++f) {
          if (c * f + d * e == b) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("multiplication") {
  const auto ctx = qctx();
  const auto X = SuperPolynomial::even_var(ctx, 0), t1 = SuperPolynomial::odd_var(ctx, 0),
             t2 = SuperPolynomial::odd_var(ctx, 1);
  CHECK((X + t1) * (X - t1) == X * X);
  CHECK((t1 * t2 + t2 * t1).is_zero());
  CHECK((t1 * t1).is_zero());
  CHECK(X * t1 == t1 * X);
  CHECK(spoly_multiply(X, t2) == X * t2);
  CHECK_THROWS_AS(X * SuperPolynomial::even_var(make_superpoly_context(Domain::rationals(), {"X"}, {}), 0),
                  DomainError);

  const auto z = zeps_context();
  CHECK(zeps(z, 5, -1) * zeps(z, 5, 1) == zeps(z, 25, 0));
  CHECK(zeps(z, 5, -5) * zeps(z, 5, 5) == zeps(z, 25, 0));
}

TEST_CASE("parsing and canonical form") {
  const auto ctx = qctx();
  const auto f = parse_superpoly(ctx, "X^2*t1 + 3 - Y*t1*t2 + t2*t1");
  CHECK(f.constant_term() == Scalar::from_int(Domain::rationals(), 3));
  CHECK(f.body() == SuperPolynomial::constant(ctx, 3));
  CHECK(parse_superpoly(ctx, "t1*t1").is_zero());
  CHECK(parse_superpoly(ctx, "t1^2").is_zero());
  CHECK(parse_superpoly(ctx, "X*X") == parse_superpoly(ctx, "X^2"));
  CHECK(parse_superpoly(ctx, "t2*t1") == -parse_superpoly(ctx, "t1*t2"));
  CHECK_THROWS_AS(parse_superpoly(ctx, "Z"), ParseError);
  CHECK_THROWS_AS(parse_superpoly(ctx, "X^"), ParseError);
  CHECK_THROWS_AS(parse_superpoly(ctx, "X^0"), ParseError);
  CHECK_THROWS_AS(make_superpoly_context(Domain::rationals(), {"X"}, {"X"}), SpecError);
  CHECK_THROWS_AS(make_superpoly_context(Domain::rationals(), {""}, {}), SpecError);
  // Body first, then even theta terms, then odd ones.
  const std::string s = f.to_string();
  CHECK(s.find('3') < s.find("t1*t2"));
  CHECK(s.find("t1*t2") < s.find("X^2*t1"));
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(12);
  const auto ctx = qctx();
  for (int i = 0; i < 300; ++i) {
    const auto f = random_poly(ctx, rng);
    REQUIRE(parse_superpoly(ctx, f.to_string()) == f);
  }
  const auto z = zeps_context();
  CHECK(parse_superpoly(z, zeps(z, -7, 3).to_string()) == zeps(z, -7, 3));
}

TEST_CASE("units and inverses") {
  const auto ctx = qctx();
  const auto one_xt = parse_superpoly(ctx, "1 + X*t1");
  REQUIRE(spoly_is_unit(one_xt));
  CHECK(spoly_invert(one_xt) == parse_superpoly(ctx, "1 - X*t1"));
  CHECK_FALSE(spoly_is_unit(parse_superpoly(ctx, "1 + X")));
  CHECK_THROWS_AS(spoly_invert(parse_superpoly(ctx, "1 + X")), NotInvertible);
  CHECK_THROWS_AS(spoly_invert(parse_superpoly(ctx, "t1")), NotInvertible);

  // All odd products zero is not expressible here, so check the linear part
  // of the inverse against the closed form a0^-1 - a_i a0^-2 eps_i.
  const auto e = make_superpoly_context(Domain::rationals(), {}, {"e1", "e2"});
  const auto f = parse_superpoly(e, "2 + 3*e1 - 5*e2");
  const auto g = spoly_invert(f);
  SuperMonomial m1{{}, 0b01}, m2{{}, 0b10};
  CHECK(g.constant_term() == Scalar::parse(Domain::rationals(), "1/2"));
  CHECK(g.coefficient(m1) == Scalar::parse(Domain::rationals(), "-3/4"));
  CHECK(g.coefficient(m2) == Scalar::parse(Domain::rationals(), "5/4"));

  const auto z = zeps_context();
  CHECK_FALSE(spoly_is_unit(zeps(z, 2, 1)));
  CHECK(spoly_is_unit(zeps(z, -1, 7)));
  CHECK(spoly_invert(zeps(z, -1, 7)) == zeps(z, -1, -7));
  CHECK(spoly_invert(zeps(z, 1, 4)) == zeps(z, 1, -4));
  CHECK_THROWS_AS(spoly_invert(zeps(z, 2, 1)), NotInvertible);
}

TEST_CASE("random inverses multiply back") {
  std::mt19937_64 rng(13);
  const auto ctx = qctx();
  int done = 0;
  while (done < 500) {
    SuperPolynomial f = random_poly(ctx, rng);
    // Unit: nonzero constant body, arbitrary theta part.
    SuperPolynomial nil(ctx);
    for (const auto& [m, c] : f.terms()) {
      if (m.mask != 0) nil.add_term(m, c);
    }
    const auto u = SuperPolynomial::constant(ctx, 1 + static_cast<long long>(rng() % 7)) + nil;
    REQUIRE(spoly_is_unit(u));
    const auto v = spoly_invert(u);
    REQUIRE(u * v == SuperPolynomial::constant(ctx, 1));
    REQUIRE(v * u == SuperPolynomial::constant(ctx, 1));
    ++done;
  }
}

TEST_CASE("body is multiplicative") {
  std::mt19937_64 rng(14);
  const auto ctx = qctx();
  for (int i = 0; i < 300; ++i) {
    const auto f = random_poly(ctx, rng), g = random_poly(ctx, rng);
    REQUIRE((f * g).body() == f.body() * g.body());
    REQUIRE((f * g) * f == f * (g * f));
  }
}

TEST_CASE("dual integer associates against brute force") {
  const auto z = zeps_context();
  // |b2 - s b| <= 8, so |t| <= 10 covers every candidate.
  for (long long a = -4; a <= 4; ++a) {
    for (long long b = -4; b <= 4; ++b) {
      for (long long a2 = -4; a2 <= 4; ++a2) {
        for (long long b2 = -4; b2 <= 4; ++b2) {
          bool found = false;
          for (int s : {1, -1}) {
            for (long long t = -10; t <= 10; ++t) found = found || (a2 == s * a && b2 == s * b + t * a);
          }
          REQUIRE(zeps_are_associates(zeps(z, a, b), zeps(z, a2, b2)) == found);
        }
      }
    }
  }
  CHECK_FALSE(zeps_are_associates(zeps(z, 5, -1), zeps(z, 5, -5)));
  CHECK_FALSE(zeps_are_associates(zeps(z, 5, -1), zeps(z, 5, 5)));
}

TEST_CASE("dual integer irreducibility against brute force") {
  const auto z = zeps_context();
  for (long long a = -12; a <= 12; ++a) {
    for (long long b = -8; b <= 8; ++b) {
      if ((a == 0 && b == 0) || std::llabs(a) == 1) {
        CHECK_THROWS_AS(zeps_is_irreducible(zeps(z, a, b)), PreconditionError);
        continue;
      }
      CAPTURE(a);
      CAPTURE(b);
      REQUIRE(zeps_is_irreducible(zeps(z, a, b)) == !zeps_reducible_brute(a, b));
      REQUIRE(zeps_is_regular(zeps(z, a, b)) == (a != 0));
    }
  }
  // |a| prime always gives an irreducible.
  for (long long a : {2, 3, 5, 7, -11}) CHECK(zeps_is_irreducible(zeps(z, a, 4)));
  // 4 + eps is irreducible although |4| is not prime; 4 = 2 * 2 needs 2 | b.
  CHECK(zeps_is_irreducible(zeps(z, 4, 1)));
  CHECK_FALSE(zeps_is_irreducible(zeps(z, 4, 2)));
}

TEST_CASE("p squared demo") {
  for (std::uint64_t p : {2, 3, 5, 7, 101}) {
    const auto r = zint_demo_p_squared(p);
    const auto z = r.square.context();
    const mpz_class pz(static_cast<unsigned long>(p));
    CHECK(r.square == zeps(z, pz * pz, 0));
    REQUIRE(r.factorizations.size() == 2);
    for (const auto& f : r.factorizations) CHECK(f.at(0) * f.at(1) == r.square);
    CHECK(r.factorizations[0][0] == zeps(z, pz, -1));
    CHECK(r.factorizations[1][1] == zeps(z, pz, pz));
    CHECK(r.products_ok);
    CHECK(r.factors_irreducible);
    CHECK(r.factors_regular);
    REQUIRE(r.cross_associate.size() == 4);
    for (bool c : r.cross_associate) CHECK_FALSE(c);
    CHECK(r.uniqueness_fails);
  }
  CHECK_THROWS_AS(zint_demo_p_squared(4), DomainError);
  CHECK_THROWS_AS(zint_demo_p_squared(1), DomainError);
}
