#include <doctest.h>

#include <random>
#include <set>

#include "support/fixtures.hpp"
#include "ufsr/error.hpp"

using namespace ufsr;
using namespace ufsr::test;

namespace {

const Domain F2 = Domain::prime_field(2);
const Domain F3 = Domain::prime_field(3);
const Domain Q = Domain::rationals();

std::vector<std::string> basis_names(const AlgebraPtr& a) {
  std::vector<std::string> out;
  for (Mask m : a->basis()) out.push_back(a->monomial_name(m));
  return out;
}

}  // namespace

TEST_CASE("monomial sign rule") {
  CHECK(koszul_sign(0b01, 0b10) == 1);
  CHECK(koszul_sign(0b10, 0b01) == -1);
  CHECK(koszul_sign(0b11, 0b01) == 0);
  // e3 * (e1 e2): two transpositions.
  CHECK(koszul_sign(0b100, 0b011) == 1);
  CHECK(koszul_sign(0b110, 0b001) == 1);
  CHECK(koszul_sign(0b010, 0b101) == -1);
  CHECK(mask_parity(0b111) == 1);
  CHECK(monomial_less(0b100, 0b011));
  CHECK(monomial_less(0b01, 0b10));
}

TEST_CASE("free algebras") {
  const auto r = make(F2, {"t1", "t2"});
  CHECK(r->dim() == 4);
  CHECK(enumerate_elements(r).size() == 16);
  CHECK(basis_names(r) == std::vector<std::string>{"1", "t1", "t2", "t1*t2"});
  CHECK(enumerate_elements(make(F2, {"t1"})).size() == 4);
  CHECK(r->graded_dims() == GradedDims{2, 2});
}

TEST_CASE("quotients") {
  const auto z = shipped("zero_products_f3");
  CHECK(z->graded_dims() == GradedDims{1, 3});
  CHECK(basis_names(z) == std::vector<std::string>{"1", "e1", "e2", "e3"});

  const auto s = make(Q, {"t1", "t2", "t3"}, {"t1*t2 - t1*t3"});
  CHECK(s->graded_dims() == GradedDims{3, 3});
  std::vector<std::string> even;
  for (std::size_t i = 0; i < s->dim(); ++i) {
    if (!s->basis_parity(i)) even.push_back(s->monomial_name(s->basis()[i]));
  }
  CHECK(even == std::vector<std::string>{"1", "t1*t2", "t2*t3"});
  CHECK(enumerate_elements(shipped("e12_e13_f3")).size() == 729);

  // dim R = 2^n - dim I, and I splits by parity.
  for (const auto& stem : shipped_stems()) {
    const auto a = shipped(stem);
    CAPTURE(stem);
    CHECK(a->dim() + a->relation_ideal().rank() == a->free_dim());
    CHECK(a->relation_ideal_dims().total() == a->relation_ideal().rank());
  }
}

TEST_CASE("build errors") {
  CHECK_THROWS_AS(make(Q, {}), SpecError);
  CHECK_THROWS_AS(make(Q, {"t1", "t1"}), SpecError);
  CHECK_THROWS_AS(make(Q, {"1t"}), SpecError);
  CHECK_THROWS_AS(make(Q, {"t1", "t2"}, {"t1 + t1*t2"}), SpecError);
  CHECK_THROWS_AS(make(Q, {"t1", "t2"}, {"t3"}), SpecError);
  CHECK_THROWS_AS(make(Q, {"t1", "t2"}, {"t1 +"}), SpecError);
  // Degree-0 and degree-1 relations never contain 1, but the ideal may still
  // swallow every generator.
  const auto all = make(Q, {"t1"}, {"t1"});
  CHECK(all->dim() == 1);
  CHECK_THROWS_AS(make(Q, {"t1"}, {"2"}), SpecError);
  std::vector<std::string> many;
  for (int i = 1; i <= 13; ++i) many.push_back("t" + std::to_string(i));
  CHECK_THROWS_AS(make(Q, many), SpecError);
}

TEST_CASE("multiplication examples") {
  const auto q2 = make(Q, {"t1", "t2"});
  CHECK(el(q2, "t1") * el(q2, "t2") == el(q2, "t1*t2"));
  CHECK(el(q2, "t2") * el(q2, "t1") == el(q2, "-t1*t2"));
  const auto s = shipped("e12_e13_q");
  CHECK(el(s, "e1") * el(s, "e2") == el(s, "e1") * el(s, "e3"));
  CHECK((el(s, "e1*e2") * el(s, "e3")).is_zero());
  CHECK((el(s, "e1") * el(s, "e2") * el(s, "e3")).is_zero());
  CHECK(el(s, "e1*e3").to_string() == "e1*e2");
  const auto f2 = shipped("f2_t1t2");
  // Signs collapse in characteristic 2.
  CHECK(el(f2, "t2*t1") == el(f2, "t1*t2"));
  CHECK_THROWS_AS(el(q2, "t1") * el(f2, "t1"), DomainError);
}

TEST_CASE("add_scale and parity") {
  const auto f2 = shipped("f2_t1t2");
  const Element a = el(f2, "1 + t1");
  CHECK(add_scale(a, Scalar::one(F2), Element::zero(f2)) == a);
  const auto q2 = make(Q, {"t1", "t2"});
  CHECK(add_scale(el(q2, "t1"), Scalar::from_int(Q, -1), el(q2, "t1")).is_zero());
  CHECK(add_scale(el(f2, "t1"), Scalar::one(F2), el(f2, "t2")) == el(f2, "t1 + t2"));

  auto [e, o] = parity_decompose(el(q2, "1 + t1"));
  CHECK(e == el(q2, "1"));
  CHECK(o == el(q2, "t1"));
  std::tie(e, o) = parity_decompose(el(q2, "t1*t2"));
  CHECK(e == el(q2, "t1*t2"));
  CHECK(o.is_zero());
  std::tie(e, o) = parity_decompose(Element::zero(q2));
  CHECK(e.is_zero());
  CHECK(o.is_zero());
  CHECK(el(q2, "t1 + t2").parity() == 1);
  CHECK(el(q2, "1 + t1*t2").parity() == 0);
  CHECK_FALSE(el(q2, "1 + t1").parity().has_value());
  CHECK_FALSE(Element::zero(q2).parity().has_value());
}

TEST_CASE("parsing and printing") {
  const auto f2 = shipped("f2_t1t2");
  const Element x = el(f2, "1 + t1*t2");
  CHECK(x.coeff(0).is_one());
  CHECK(x.coeff(3).is_one());
  const auto q2 = make(Q, {"t1", "t2"});
  CHECK(el(q2, "t2*t1").to_string() == "-t1*t2");
  CHECK(el(q2, "t1*t1").is_zero());
  CHECK(el(q2, "t1*t1").to_string() == "0");
  CHECK(el(q2, "1/2*t1 - 3 + 2*t2").to_string() == "-3 + 1/2*t1 + 2*t2");
  CHECK(el(q2, "-t1 + 2").to_string() == "2 - t1");

  CHECK_THROWS_AS(el(q2, ""), ParseError);
  CHECK_THROWS_AS(el(q2, "t3"), ParseError);
  CHECK_THROWS_AS(el(q2, "t1 +"), ParseError);
  CHECK_THROWS_AS(el(q2, "t1^2"), ParseError);
  CHECK_THROWS_AS(el(f2, "1/2*t1"), ParseError);
  try {
    el(q2, "t1 + * t2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("format round trip") {
  std::mt19937_64 rng(3);
  for (const auto& stem : shipped_stems()) {
    const auto a = shipped(stem);
    for (int i = 0; i < 100; ++i) {
      const Element x = random_element(a, rng);
      REQUIRE(el(a, format_element(x)) == x);
    }
  }
}

TEST_CASE("enumeration is canonical and complete") {
  const auto a = shipped("zero_products_f3");
  const auto en = enumerate_elements(a);
  std::set<std::string> seen;
  std::uint64_t i = 0;
  Element prev = Element::zero(a);
  for (const Element& x : en) {
    CHECK(en.index_of(x) == i);
    if (i > 0) CHECK(prev < x);
    seen.insert(format_element(x));
    prev = x;
    ++i;
  }
  CHECK(seen.size() == 81);
  CHECK_THROWS_AS(enumerate_elements(make(Q, {"t1"})), Unsupported);
}

TEST_CASE("superalgebra axioms on random elements") {
  std::mt19937_64 rng(17);
  for (const auto& stem : shipped_stems()) {
    const auto a = shipped(stem);
    CAPTURE(stem);
    for (int i = 0; i < 500; ++i) {
      const Element x = random_element(a, rng), y = random_element(a, rng), z = random_element(a, rng);
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE(x * (y + z) == x * y + x * z);
      const int px = static_cast<int>(rng() % 2), py = static_cast<int>(rng() % 2);
      const Element hx = random_homogeneous(a, px, rng), hy = random_homogeneous(a, py, rng);
      const Element swapped = hy * hx;
      REQUIRE(hx * hy == (px * py == 1 ? -swapped : swapped));
      if (px == 1) REQUIRE((hx * hx).is_zero());
      const Element prod = hx * hy;
      if (!prod.is_zero()) REQUIRE(prod.parity() == (px + py) % 2);
    }
  }
}

TEST_CASE("odd elements square to zero, exhaustively") {
  for (const auto& a : {shipped("f2_t1t2"), shipped("zero_products_f3"), shipped("e12_e13_f3"),
                        make(F2, {"t1", "t2", "t3"})}) {
    for (const Element& x : enumerate_elements(a)) {
      const Element o = x.odd_part();
      REQUIRE((o * o).is_zero());
    }
  }
}

TEST_CASE("exhaustive associativity and supercommutativity over F2") {
  for (const auto& a : {shipped("f2_t1t2"), make(F2, {"t1", "t2", "t3"}, {"t1*t2 + t2*t3"}),
                        make(F2, {"t1", "t2", "t3"}, {"t1*t2", "t1*t3 + t2*t3"})}) {
    REQUIRE(a->dim() <= 6);
    const auto en = enumerate_elements(a);
    std::vector<Element> all(en.begin(), en.end());
    for (const auto& x : all) {
      for (const auto& y : all) {
        const auto [x0, x1] = parity_decompose(x);
        const auto [y0, y1] = parity_decompose(y);
        REQUIRE(x * y == y0 * x0 + y1 * x0 + y0 * x1 - y1 * x1);
        for (std::size_t k = 0; k < a->dim(); ++k) {
          const Element z = Element::basis_element(a, k);
          REQUIRE((x * y) * z == x * (y * z));
        }
      }
    }
  }
}
