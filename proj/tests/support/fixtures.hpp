#pragma once

#include <random>
#include <string>

#include "ufsr/algebra.hpp"
#include "ufsr/spec_io.hpp"

namespace ufsr::test {

inline AlgebraPtr shipped(const std::string& stem) {
  return build_algebra(load_spec_file(std::string(UFSR_SPECS_DIR) + "/" + stem + ".json"));
}

inline AlgebraPtr make(Domain field, std::vector<std::string> gens, std::vector<std::string> relations = {}) {
  return build_algebra(AlgebraSpec{field, std::move(gens), std::move(relations)});
}

inline Element el(const AlgebraPtr& a, const std::string& text) { return parse_element(a, text); }

inline Scalar random_scalar(const Domain& d, std::mt19937_64& rng, int spread = 5) {
  if (d.is_finite()) return Scalar::from_int(d, static_cast<long long>(rng() % d.characteristic()));
  const long long num = static_cast<long long>(rng() % (2 * spread + 1)) - spread;
  if (d.kind() == DomainKind::Integer) return Scalar::from_int(d, num);
  const long long den = 1 + static_cast<long long>(rng() % 3);
  return Scalar::fraction(d, mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

inline Element random_element(const AlgebraPtr& a, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < a->dim(); ++i) v.push_back(random_scalar(a->field(), rng));
  return Element(a, v);
}

/// Random element supported on basis monomials of one parity.
inline Element random_homogeneous(const AlgebraPtr& a, int parity, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    v.push_back(a->basis_parity(i) == parity ? random_scalar(a->field(), rng) : Scalar::zero(a->field()));
  }
  return Element(a, v);
}

inline Element random_unit(const AlgebraPtr& a, std::mt19937_64& rng) {
  Element x = random_element(a, rng);
  while (x.constant_term().is_zero()) x = random_element(a, rng);
  return x;
}

inline const std::vector<std::string>& shipped_stems() {
  static const std::vector<std::string> stems = {"dual_f3", "dual_q", "e12_e13_f3", "e12_e13_q",
                                                 "f2_t1t2", "q_t1t2", "zero_products_f3", "zero_products_q5"};
  return stems;
}

}  // namespace ufsr::test
