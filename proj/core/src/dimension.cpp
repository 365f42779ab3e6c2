#include "ufsr/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ufsr/error.hpp"
#include "ufsr/structure.hpp"

namespace ufsr {

namespace {

struct OddSearch {
  AlgebraPtr alg;
  std::vector<Element> odd;
  std::size_t bound = 0;
  std::size_t best = 0;

  void dfs(const Element& product, std::size_t next, std::size_t length) {
    best = std::max(best, length);
    if (best >= bound) return;
    // Basis elements pairwise anticommute, so increasing index tuples suffice.
    for (std::size_t i = next; i < odd.size() && best < bound; ++i) {
      if (length + (odd.size() - i) <= best) return;
      const Element p = product * odd[i];
      if (!p.is_zero()) dfs(p, i + 1, length + 1);
    }
  }
};

bool small_enumeration(const AlgebraPtr& alg, std::size_t coords) {
  if (!alg->field().is_finite()) return false;
  return std::pow(static_cast<double>(alg->field().characteristic()), static_cast<double>(coords)) <= 65536.0;
}

}  // namespace

std::size_t odd_ksdim(const AlgebraPtr& algebra) {
  OddSearch s{algebra, {}, 0, 0};
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    if (algebra->basis_parity(i)) s.odd.push_back(Element::basis_element(algebra, i));
  }
  // A product of k odd elements lies in J^k.
  const auto nil = nilpotency_index(canonical_superideal(algebra));
  s.bound = s.odd.size();
  if (nil) s.bound = std::min<std::size_t>(s.bound, *nil - 1);
  s.dfs(Element::one(algebra), 0, 0);
  return s.best;
}

std::size_t even_ksdim(const AlgebraPtr& algebra) {
  std::vector<std::size_t> even;
  for (std::size_t i = 1; i < algebra->dim(); ++i) {
    if (!algebra->basis_parity(i)) even.push_back(i);
  }
  bool ok = true;
  if (small_enumeration(algebra, even.size())) {
    // Non-units of R_0 are exactly the elements with zero constant term.
    ok = for_each_in_coordinates(algebra, even, [](const Element& x) { return is_nilpotent(x); });
  } else {
    ok = nilpotency_index(canonical_superideal(algebra)).has_value();
  }
  if (!ok) throw std::logic_error("R_0 has a non-nilpotent non-unit");
  return 0;
}

KsdimPair ksdim(const AlgebraPtr& algebra) { return {even_ksdim(algebra), odd_ksdim(algebra)}; }

CotangentReport cotangent_sdim(const AlgebraPtr& algebra) {
  const auto ms = maximal_ideals(algebra);
  if (ms.size() != 1) throw PreconditionError("cotangent superdimension needs a local superring");
  const Ideal& m = ms.front();
  CotangentReport r;
  r.maximal_ideal_dims = m.dims();
  r.m_squared_dims = ideal_power(m, 2).dims();
  r.sdim = {r.maximal_ideal_dims.even - r.m_squared_dims.even, r.maximal_ideal_dims.odd - r.m_squared_dims.odd};
  return r;
}

bool is_regular_superring(const AlgebraPtr& algebra) {
  const auto c = cotangent_sdim(algebra);
  const auto k = ksdim(algebra);
  return k.even == c.sdim.even && k.odd == c.sdim.odd;
}

ArtinianProfile artinian_profile(const AlgebraPtr& algebra) {
  ArtinianProfile p;
  p.ksdim = ksdim(algebra);
  const Ideal j = canonical_superideal(algebra);
  p.maximal_power_vanishing = nilpotency_index(j);
  // A graded prime contains every homogeneous nilpotent, hence J_R; it is
  // then J_R, and the question is whether J_R is maximal.
  p.all_primes_maximal = p.maximal_power_vanishing.has_value() && is_maximal_ideal(j);
  return p;
}

}  // namespace ufsr
