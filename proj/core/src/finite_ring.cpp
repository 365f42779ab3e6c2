#include "ufsr/finite_ring.hpp"

#include "ufsr/error.hpp"

namespace ufsr {

namespace {

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

// y -= c * x
void mod_axpy(ModVec& y, std::uint32_t c, const ModVec& x, std::uint32_t p) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i] == 0) continue;
    y[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{p - mod_mul(c, x[i], p)}) % p);
  }
}

}  // namespace

ModVec ModEchelon::reduce(ModVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint32_t c = v[pivots_[r]];
    if (c) mod_axpy(v, c, rows_[r], p_);
  }
  return v;
}

bool ModEchelon::contains(const ModVec& v) const {
  const ModVec r = reduce(v);
  for (auto c : r) {
    if (c) return false;
  }
  return true;
}

bool ModEchelon::insert(ModVec v) {
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < n_ && v[pivot] == 0) ++pivot;
  if (pivot == n_) return false;
  const std::uint32_t inv = mod_inv(v[pivot], p_);
  for (auto& c : v) c = mod_mul(c, inv, p_);
  for (auto& row : rows_) {
    if (row[pivot]) mod_axpy(row, row[pivot], v, p_);
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

std::vector<std::uint32_t> ModEchelon::key() const {
  std::vector<std::uint32_t> k;
  k.reserve(rows_.size() * n_);
  for (const auto& r : rows_) k.insert(k.end(), r.begin(), r.end());
  return k;
}

std::optional<ModAffine> mod_solve(std::uint32_t p, const std::vector<ModVec>& columns, const ModVec& target) {
  const std::size_t m = target.size();
  const std::size_t n = columns.size();
  // Augmented matrix, row-major.
  std::vector<ModVec> a(m, ModVec(n + 1, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < m; ++i) a[i][n] = target[i];

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    const std::uint32_t inv = mod_inv(a[row][col], p);
    for (auto& c : a[row]) c = mod_mul(c, inv, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != row && a[i][col]) mod_axpy(a[i], a[i][col], a[row], p);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (a[i][n]) return std::nullopt;
  }
  ModAffine sol;
  sol.particular.assign(n, 0);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) sol.particular[pivot_cols[r]] = a[r][n];
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ModVec k(n, 0);
    k[f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) k[pivot_cols[r]] = a[r][f] ? p - a[r][f] : 0;
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

FiniteRing::FiniteRing(AlgebraPtr algebra) : algebra_(std::move(algebra)), dim_(algebra_->dim()) {
  const Domain& d = algebra_->field();
  if (!d.is_finite()) throw Unsupported("finite ring kernel needs a finite base field");
  if (d.characteristic() > (1u << 20)) throw Unsupported("finite ring kernel supports p < 2^20");
  p_ = static_cast<std::uint32_t>(d.characteristic());
  table_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : algebra_->product_of_basis(i, j))
        table_[i * dim_ + j].emplace_back(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(c.residue()));
    }
  }
}

ModVec FiniteRing::multiply(const ModVec& a, const ModVec& b) const {
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      const std::uint64_t ab = std::uint64_t{a[i]} * b[j] % p_;
      for (const auto& [k, c] : table_[i * dim_ + j]) acc[k] = (acc[k] + ab * c) % p_;
    }
  }
  return ModVec(acc.begin(), acc.end());
}

ModVec FiniteRing::to_mod(const Element& e) const {
  if (e.algebra() != algebra_) throw DomainError("element belongs to a different algebra");
  ModVec v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = static_cast<std::uint32_t>(e.coeff(i).residue());
  return v;
}

Element FiniteRing::to_element(const ModVec& v) const {
  const Domain& d = algebra_->field();
  Vector out;
  out.reserve(dim_);
  for (auto c : v) out.push_back(Scalar::from_int(d, c));
  return Element(algebra_, std::move(out));
}

std::uint32_t FiniteRing::inverse(std::uint32_t a) const {
  if (a % p_ == 0) throw NotInvertible("inverse of zero");
  return mod_inv(a, p_);
}

}  // namespace ufsr
