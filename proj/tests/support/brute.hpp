#pragma once

// Definition-level brute force over a finite universe (R or R_0), used as an
// oracle for the factorization engine. Everything is read off a full
// multiplication table; nothing here shares code with the engine.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "ufsr/algebra.hpp"

namespace ufsr::test {

class BruteRing {
 public:
  using Multiset = std::vector<std::size_t>;

  /// The whole ring, or its even part.
  BruteRing(const AlgebraPtr& alg, bool even_only) : alg_(alg), en_(alg) {
    if (en_.size() > 729) throw std::invalid_argument("brute force is limited to 729 elements");
    for (std::uint64_t i = 0; i < en_.size(); ++i) {
      Element x = en_.at(i);
      if (even_only && !x.odd_part().is_zero()) continue;
      local_[i] = elems_.size();
      elems_.push_back(std::move(x));
    }
    const std::size_t n = elems_.size();
    table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = local_.at(en_.index_of(elems_[a] * elems_[b]));
    }
    zero_ = local_.at(en_.index_of(Element::zero(alg)));
    one_ = local_.at(en_.index_of(Element::one(alg)));
    for (std::size_t a = 0; a < n; ++a) {
      bool u = false;
      for (std::size_t b = 0; b < n && !u; ++b) u = mul(a, b) == one_ && mul(b, a) == one_;
      unit_.push_back(u);
      if (u) units_.push_back(a);
    }
    classify();
  }

  std::size_t size() const { return elems_.size(); }
  const Element& element(std::size_t i) const { return elems_[i]; }
  std::size_t index(const Element& e) const { return local_.at(en_.index_of(e)); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * elems_.size() + b]; }
  bool is_unit(std::size_t a) const { return unit_[a]; }
  bool is_zero(std::size_t a) const { return a == zero_; }
  std::size_t unit_count() const { return units_.size(); }

  bool associates(std::size_t a, std::size_t b) const { return cls_[a] == cls_[b]; }
  std::size_t class_of(std::size_t a) const { return cls_[a]; }
  bool is_normal(std::size_t a) const { return normal_[a]; }
  bool is_irreducible(std::size_t a) const { return irreducible_[a]; }
  bool is_normal_irreducible(std::size_t a) const { return normal_[a] && irreducible_[a]; }

  /// Factorizations of x into normal irreducibles, as sorted multisets of
  /// associate classes. With homogeneous_only, factors (and every partial
  /// product) must be homogeneous.
  const std::set<Multiset>& factorizations(std::size_t x, bool homogeneous_only = false) {
    auto& memo = homogeneous_only ? hmemo_ : memo_;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::set<Multiset> out;
    auto ok = [&](std::size_t e) { return !homogeneous_only || homogeneous_[e]; };
    if (is_normal_irreducible(x) && ok(x)) out.insert({cls_[x]});
    for (const auto& [f, y] : splits_[x]) {
      if (!ok(f) || !ok(y)) continue;
      for (Multiset m : factorizations(y, homogeneous_only)) {
        m.push_back(cls_[f]);
        std::sort(m.begin(), m.end());
        out.insert(std::move(m));
      }
    }
    return memo.emplace(x, std::move(out)).first->second;
  }

  /// Every nonzero non-unit subject (homogeneous ones only if asked) has
  /// exactly one factorization.
  bool unique_factorization(bool homogeneous_only = false) {
    for (std::size_t x = 0; x < size(); ++x) {
      if (is_zero(x) || is_unit(x) || (homogeneous_only && !homogeneous_[x])) continue;
      if (factorizations(x, homogeneous_only).size() != 1) return false;
    }
    return true;
  }

 private:
  void classify() {
    const std::size_t n = size();
    // Associates: orbits under left and right multiplication by units.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (auto u : units_) {
        parent[find(mul(u, a))] = find(a);
        parent[find(mul(a, u))] = find(a);
      }
    }
    cls_.resize(n);
    for (std::size_t a = 0; a < n; ++a) cls_[a] = find(a);

    normal_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::set<std::size_t> left, right;
      for (std::size_t r = 0; r < n; ++r) {
        right.insert(mul(a, r));
        left.insert(mul(r, a));
      }
      normal_[a] = left == right;
    }

    std::vector<bool> product_of_non_units(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (is_unit(b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!is_unit(c)) product_of_non_units[mul(b, c)] = true;
      }
    }
    irreducible_.resize(n);
    homogeneous_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      irreducible_[a] = !is_zero(a) && !is_unit(a) && !product_of_non_units[a];
      homogeneous_[a] = elems_[a].odd_part().is_zero() || elems_[a].even_part().is_zero();
    }
    // x = f * y with f normal irreducible and y a nonzero non-unit.
    splits_.resize(n);
    for (std::size_t f = 0; f < n; ++f) {
      if (!is_normal_irreducible(f)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (!is_unit(y) && !is_zero(y)) splits_[mul(f, y)].emplace_back(f, y);
      }
    }
  }

  AlgebraPtr alg_;
  ElementEnumeration en_;
  std::vector<Element> elems_;
  std::map<std::uint64_t, std::size_t> local_;
  std::vector<std::size_t> table_;
  std::size_t zero_ = 0, one_ = 0;
  std::vector<bool> unit_;
  std::vector<std::size_t> units_;
  std::vector<std::size_t> cls_;
  std::vector<bool> normal_, irreducible_, homogeneous_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> splits_;
  std::map<std::size_t, std::set<Multiset>> memo_, hmemo_;
};

}  // namespace ufsr::test
