#include "ufsr/exhaustive.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "ufsr/error.hpp"

namespace ufsr {

namespace {

std::vector<std::size_t> universe_coordinates(const Superalgebra& alg, FactorScope scope) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (scope == FactorScope::Full || alg.basis_parity(i) == 0) out.push_back(i);
  }
  return out;
}

}  // namespace

ExhaustiveFactorizer::ExhaustiveFactorizer(AlgebraPtr algebra, FactorScope scope, unsigned cap)
    : ring_(std::move(algebra)), scope_(scope), cap_(cap), q_(ring_.p()) {
  const auto& alg = *ring_.algebra();
  coords_ = universe_coordinates(alg, scope);
  for (auto c : coords_) coord_parity_.push_back(alg.basis_parity(c));
  size_ = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (size_ > kMaxElements / q_) throw Unsupported("ring has too many elements for exhaustive factorization");
    size_ *= q_;
  }
  const Index n = static_cast<Index>(size_);

  // Unit group: greedily add the least unit outside the subgroup generated so far.
  unit_count_ = static_cast<std::size_t>(size_ - size_ / q_);
  std::vector<bool> in_group(n, false);
  std::vector<Index> group{one()};
  in_group[one()] = true;
  for (Index u = 0; u < n && group.size() < unit_count_; ++u) {
    if (!is_unit(u) || in_group[u]) continue;
    generators_.push_back(u);
    for (std::size_t k = 0; k < group.size(); ++k) {
      for (Index g : generators_) {
        const Index h = multiply(group[k], g);
        if (!in_group[h]) {
          in_group[h] = true;
          group.push_back(h);
        }
      }
    }
  }
  if (group.size() != unit_count_) throw std::logic_error("unit group closure is incomplete");

  // Associate classes: orbits of x -> g x and x -> x g over the generators.
  class_.assign(n, kNone);
  left_.assign(n, kNone);
  right_.assign(n, kNone);
  for (Index x = q_; x < n; x += q_) {
    if (class_[x] != kNone) continue;
    const auto c = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(x);
    class_[x] = c;
    left_[x] = right_[x] = one();
    std::deque<Index> queue{x};
    while (!queue.empty()) {
      const Index y = queue.front();
      queue.pop_front();
      for (Index g : generators_) {
        const Index a = multiply(g, y);
        if (class_[a] == kNone) {
          class_[a] = c;
          left_[a] = multiply(g, left_[y]);
          right_[a] = right_[y];
          queue.push_back(a);
        }
        const Index b = multiply(y, g);
        if (class_[b] == kNone) {
          class_[b] = c;
          left_[b] = left_[y];
          right_[b] = multiply(right_[y], g);
          queue.push_back(b);
        }
      }
    }
  }

  // Normality is an associate invariant; R_0 is commutative.
  class_normal_.assign(reps_.size(), true);
  if (scope_ == FactorScope::Full) {
    const std::size_t d = ring_.dim();
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      const ModVec a = global(reps_[c]);
      ModEchelon left(q_, d), right(q_, d);
      for (std::size_t j = 0; j < d; ++j) {
        ModVec e(d, 0);
        e[j] = 1;
        right.insert(ring_.multiply(a, e));
        left.insert(ring_.multiply(e, a));
      }
      class_normal_[c] = left.key() == right.key();
    }
  }

  // x is reducible iff x lies in b * m for some non-unit b; each b * m is a
  // subspace, so we collect the distinct ones and mark their elements.
  reducible_.assign(n, false);
  space_of_.assign(n, kNone);
  std::map<std::vector<std::uint32_t>, std::uint32_t> space_ids;
  const std::size_t m = coords_.size();
  for (Index b = q_; b < n; b += q_) {
    const ModVec bg = global(b);
    ModEchelon s(q_, m);
    for (std::size_t j = 1; j < m; ++j) {
      ModVec e(ring_.dim(), 0);
      e[coords_[j]] = 1;
      s.insert(local_vector(local(ring_.multiply(bg, e))));
    }
    auto [it, fresh] = space_ids.try_emplace(s.key(), static_cast<std::uint32_t>(spaces_.size()));
    if (fresh) spaces_.push_back(std::move(s));
    space_of_[b] = it->second;
  }
  for (const auto& s : spaces_) {
    const auto& rows = s.rows();
    std::vector<std::uint32_t> digits(rows.size(), 0);
    ModVec v(m, 0);
    while (true) {
      reducible_[encode_local(v)] = true;
      std::size_t i = 0;
      for (; i < digits.size(); ++i) {
        for (std::size_t k = 0; k < m; ++k) v[k] = (v[k] + rows[i][k]) % q_;
        if (++digits[i] < q_) break;
        digits[i] = 0;  // v has wrapped around in this direction
      }
      if (i == digits.size()) break;
    }
  }
  reducible_[0] = false;

  ni_by_space_.assign(spaces_.size(), {});
  for (Index x = q_; x < n; x += q_) {
    if (is_normal_irreducible(x)) {
      normal_irreducibles_.push_back(x);
      ni_by_space_[space_of_[x]].push_back(x);
    }
  }
  state_.assign(reps_.size(), 0);
  memo_.assign(reps_.size(), {});
}

ModVec ExhaustiveFactorizer::local_vector(Index x) const {
  ModVec v(coords_.size());
  for (auto& c : v) {
    c = x % q_;
    x /= q_;
  }
  return v;
}

ExhaustiveFactorizer::Index ExhaustiveFactorizer::encode_local(const ModVec& v) const {
  Index x = 0;
  for (std::size_t i = v.size(); i-- > 0;) x = x * q_ + v[i];
  return x;
}

ModVec ExhaustiveFactorizer::global(Index x) const {
  ModVec g(ring_.dim(), 0);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    g[coords_[i]] = x % q_;
    x /= q_;
  }
  return g;
}

ExhaustiveFactorizer::Index ExhaustiveFactorizer::local(const ModVec& g) const {
  ModVec v(coords_.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (k < coords_.size() && coords_[k] == i) {
      v[k++] = g[i];
    } else if (g[i]) {
      throw DomainError("element lies outside the factorization universe");
    }
  }
  return encode_local(v);
}

Element ExhaustiveFactorizer::element(Index x) const { return ring_.to_element(global(x)); }

ExhaustiveFactorizer::Index ExhaustiveFactorizer::index_of(const Element& e) const { return local(ring_.to_mod(e)); }

ExhaustiveFactorizer::Index ExhaustiveFactorizer::multiply(Index a, Index b) const {
  return local(ring_.multiply(global(a), global(b)));
}

std::optional<int> ExhaustiveFactorizer::parity(Index x) const {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < coords_.size(); ++i, x /= q_) {
    if (x % q_) (coord_parity_[i] ? odd : even) = true;
  }
  if (even == odd) return std::nullopt;
  return odd ? 1 : 0;
}

bool ExhaustiveFactorizer::associates(Index a, Index b) const {
  if (a == b) return true;
  if (class_[a] == kNone || class_[b] == kNone) {
    // Zero is associate only to itself; all units are associate to 1.
    return a != 0 && b != 0 && is_unit(a) && is_unit(b);
  }
  return class_[a] == class_[b];
}

bool ExhaustiveFactorizer::is_normal(Index x) const {
  if (class_[x] == kNone) return true;
  return class_normal_[class_[x]];
}

bool ExhaustiveFactorizer::is_irreducible(Index x) const { return class_[x] != kNone && !reducible_[x]; }

std::vector<ExhaustiveFactorizer::Index> ExhaustiveFactorizer::solve_all(
    Index f, Index x, const std::vector<std::size_t>& unknown_coords) const {
  const ModVec fg = global(f);
  std::vector<ModVec> columns;
  columns.reserve(unknown_coords.size());
  for (auto j : unknown_coords) {
    ModVec e(ring_.dim(), 0);
    e[coords_[j]] = 1;
    columns.push_back(local_vector(local(ring_.multiply(fg, e))));
  }
  auto sol = mod_solve(q_, columns, local_vector(x));
  std::vector<Index> out;
  if (!sol) return out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < sol->kernel.size(); ++i) {
    count *= q_;
    if (count > kMaxElements) throw LimitExceeded("too many cofactors to enumerate");
  }
  std::vector<std::uint32_t> digits(sol->kernel.size(), 0);
  ModVec y = sol->particular;
  while (true) {
    ModVec full(coords_.size(), 0);
    for (std::size_t k = 0; k < unknown_coords.size(); ++k) full[unknown_coords[k]] = y[k];
    out.push_back(encode_local(full));
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      for (std::size_t k = 0; k < y.size(); ++k) y[k] = (y[k] + sol->kernel[i][k]) % q_;
      if (++digits[i] < q_) break;
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
  return out;
}

std::vector<std::size_t> ExhaustiveFactorizer::divisor_spaces(Index x) const {
  std::vector<std::size_t> out;
  const ModVec v = local_vector(x);
  for (std::size_t s = 0; s < spaces_.size(); ++s) {
    if (!ni_by_space_[s].empty() && spaces_[s].contains(v)) out.push_back(s);
  }
  return out;
}

ExhaustiveFactorizer::Entry ExhaustiveFactorizer::transport(const Entry& e, Index u, Index v) const {
  Entry out = e;
  auto& f = out.factors;
  f.front() = multiply(u, f.front());
  f.back() = multiply(f.back(), v);
  return out;
}

const std::vector<ExhaustiveFactorizer::Entry>& ExhaustiveFactorizer::class_factorizations(std::uint32_t cls,
                                                                                           unsigned depth) {
  if (state_[cls] == 2) return memo_[cls];
  if (state_[cls] == 1) throw std::logic_error("factorization search revisited a class in progress");
  if (depth > cap_) throw LimitExceeded("factorization search exceeded the cap of " + std::to_string(cap_));
  state_[cls] = 1;
  const Index x = reps_[cls];
  std::vector<Entry> result;
  if (is_normal_irreducible(x)) {
    result.push_back({{cls}, {x}});
  } else if (reducible_[x]) {
    std::vector<std::size_t> unknowns;
    for (std::size_t j = 1; j < coords_.size(); ++j) unknowns.push_back(j);
    std::map<std::vector<std::uint32_t>, std::vector<Index>> found;
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> seen;
    for (auto s : divisor_spaces(x)) {
      for (Index f : ni_by_space_[s]) {
        for (Index y : solve_all(f, x, unknowns)) {
          const std::uint32_t cy = class_[y];
          if (!seen.try_emplace({class_[f], cy}, true).second) continue;
          const auto& sub = class_factorizations(cy, depth + 1);
          const auto [u, v] = certificate(y);
          for (const auto& e : sub) {
            Entry t = transport(e, u, v);
            std::vector<std::uint32_t> key = t.classes;
            key.insert(std::upper_bound(key.begin(), key.end(), class_[f]), class_[f]);
            if (found.count(key)) continue;
            std::vector<Index> factors{f};
            factors.insert(factors.end(), t.factors.begin(), t.factors.end());
            found.emplace(std::move(key), std::move(factors));
          }
        }
      }
    }
    for (auto& [k, fs] : found) result.push_back({k, std::move(fs)});
  }
  memo_[cls] = std::move(result);
  state_[cls] = 2;
  return memo_[cls];
}

std::vector<ExhaustiveFactorizer::Entry> ExhaustiveFactorizer::factorizations(Index x) {
  if (x >= size_) throw DomainError("element index out of range");
  if (x == 0 || is_unit(x)) throw PreconditionError("factorization subject must be a nonzero non-unit");
  const auto& entries = class_factorizations(class_[x], 0);
  const auto [u, v] = certificate(x);
  std::vector<Entry> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(transport(e, u, v));
  return out;
}

const std::vector<ExhaustiveFactorizer::Entry>& ExhaustiveFactorizer::homogeneous_memo(Index x, unsigned depth) {
  auto& st = h_state_[x];
  if (st == 2) return h_memo_[x];
  if (st == 1) throw std::logic_error("homogeneous factorization search revisited an element in progress");
  if (depth > cap_) throw LimitExceeded("factorization search exceeded the cap of " + std::to_string(cap_));
  st = 1;
  std::vector<Entry> result;
  if (is_normal_irreducible(x)) {
    result.push_back({{class_[x]}, {x}});
  } else if (reducible_[x]) {
    const int px = *parity(x);
    std::map<std::vector<std::uint32_t>, std::vector<Index>> found;
    for (auto s : divisor_spaces(x)) {
      for (Index f : ni_by_space_[s]) {
        const auto pf = parity(f);
        if (!pf) continue;
        const int py = (px + *pf) % 2;
        std::vector<std::size_t> unknowns;
        for (std::size_t j = 1; j < coords_.size(); ++j) {
          if (coord_parity_[j] == py) unknowns.push_back(j);
        }
        for (Index y : solve_all(f, x, unknowns)) {
          for (const auto& e : homogeneous_memo(y, depth + 1)) {
            std::vector<std::uint32_t> key = e.classes;
            key.insert(std::upper_bound(key.begin(), key.end(), class_[f]), class_[f]);
            if (found.count(key)) continue;
            std::vector<Index> factors{f};
            factors.insert(factors.end(), e.factors.begin(), e.factors.end());
            found.emplace(std::move(key), std::move(factors));
          }
        }
      }
    }
    for (auto& [k, fs] : found) result.push_back({k, std::move(fs)});
  }
  h_memo_[x] = std::move(result);
  h_state_[x] = 2;
  return h_memo_[x];
}

std::vector<ExhaustiveFactorizer::Entry> ExhaustiveFactorizer::homogeneous_factorizations(Index x) {
  if (scope_ != FactorScope::Full) throw PreconditionError("homogeneous factorization needs the full scope");
  if (x >= size_) throw DomainError("element index out of range");
  if (x == 0 || is_unit(x)) throw PreconditionError("factorization subject must be a nonzero non-unit");
  if (!parity(x)) throw PreconditionError("homogeneous factorization subject must be homogeneous");
  return homogeneous_memo(x, 0);
}

ExhaustiveFactorizer::Verdict ExhaustiveFactorizer::check() {
  for (std::uint32_t c = 0; c < reps_.size(); ++c) {
    const auto& entries = class_factorizations(c, 0);
    if (entries.size() != 1) return {false, reps_[c], entries};
  }
  return {};
}

ExhaustiveFactorizer::Verdict ExhaustiveFactorizer::check_homogeneous() {
  if (scope_ != FactorScope::Full) throw PreconditionError("homogeneous check needs the full scope");
  for (Index x = q_; x < size_; x += q_) {
    if (!parity(x)) continue;
    const auto& entries = homogeneous_memo(x, 0);
    if (entries.size() != 1) return {false, x, entries};
  }
  return {};
}

}  // namespace ufsr
