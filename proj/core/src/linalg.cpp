#include "ufsr/linalg.hpp"

#include <algorithm>

#include "ufsr/error.hpp"

namespace ufsr {

Vector zero_vector(const Domain& d, std::size_t n) { return Vector(n, Scalar::zero(d)); }

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

std::optional<std::size_t> highest_nonzero(const Vector& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (!v[i].is_zero()) return i;
  }
  return std::nullopt;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] -= a * x[i];
  }
}

}  // namespace

Vector RowEchelon::reduce(Vector v) const {
  if (v.size() != n_) throw DomainError("vector length mismatch in reduce");
  for (std::size_t r = rows_.size(); r-- > 0;) {
    const Scalar c = v[pivots_[r]];
    if (!c.is_zero()) axpy(v, c, rows_[r]);
  }
  return v;
}

bool RowEchelon::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool RowEchelon::insert(Vector v) {
  v = reduce(std::move(v));
  auto pivot = highest_nonzero(v);
  if (!pivot) return false;
  const Scalar inv = v[*pivot].inverse();
  for (auto& s : v) s *= inv;
  for (auto& row : rows_) {
    const Scalar c = row[*pivot];
    if (!c.is_zero()) axpy(row, c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, *pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

std::vector<std::size_t> RowEchelon::free_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

bool RowEchelon::is_subspace_of(const RowEchelon& o) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const Vector& r) { return o.contains(r); });
}

RowEchelon span(const Domain& d, std::size_t n, const std::vector<Vector>& vectors) {
  RowEchelon e(d, n);
  for (const auto& v : vectors) e.insert(v);
  return e;
}

namespace {

struct Reduced {
  std::vector<Vector> matrix;            // rows x (k + 1), last column is the target
  std::vector<std::size_t> pivot_cols;   // pivot column of each leading row
};

Reduced eliminate(const std::vector<Vector>& columns, const Vector& target, const Domain& d, std::size_t rows) {
  const std::size_t k = columns.size();
  Reduced r;
  r.matrix.assign(rows, zero_vector(d, k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j].size() != rows) throw DomainError("column length mismatch in solve");
    for (std::size_t i = 0; i < rows; ++i) r.matrix[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < rows; ++i) r.matrix[i][k] = target[i];

  std::size_t lead = 0;
  for (std::size_t col = 0; col < k && lead < rows; ++col) {
    std::size_t sel = lead;
    while (sel < rows && r.matrix[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(r.matrix[sel], r.matrix[lead]);
    const Scalar inv = r.matrix[lead][col].inverse();
    for (auto& s : r.matrix[lead]) s *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead) continue;
      const Scalar c = r.matrix[i][col];
      if (!c.is_zero()) axpy(r.matrix[i], c, r.matrix[lead]);
    }
    r.pivot_cols.push_back(col);
    ++lead;
  }
  return r;
}

std::vector<Vector> kernel_from(const Reduced& r, const Domain& d, std::size_t k) {
  std::vector<bool> is_pivot(k, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(d, k);
    x[f] = Scalar::one(d);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) x[r.pivot_cols[i]] = -r.matrix[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::optional<AffineSolution> solve(const std::vector<Vector>& columns, const Vector& target) {
  const Domain d = target.empty() ? Domain::rationals() : target.front().domain();
  const std::size_t rows = target.size();
  const std::size_t k = columns.size();
  Reduced r = eliminate(columns, target, d, rows);
  for (std::size_t i = r.pivot_cols.size(); i < rows; ++i) {
    if (!r.matrix[i][k].is_zero()) return std::nullopt;
  }
  AffineSolution sol;
  sol.particular = zero_vector(d, k);
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) sol.particular[r.pivot_cols[i]] = r.matrix[i][k];
  sol.kernel = kernel_from(r, d, k);
  return sol;
}

std::vector<Vector> kernel(const std::vector<Vector>& columns, const Domain& d, std::size_t rows) {
  Reduced r = eliminate(columns, zero_vector(d, rows), d, rows);
  return kernel_from(r, d, columns.size());
}

}  // namespace ufsr
