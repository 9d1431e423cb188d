#ifndef PCLIE_LINALG_HPP
#define PCLIE_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pclie/error.hpp"
#include "pclie/scalar.hpp"

namespace pclie {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n, FieldTag f) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(std::size_t n, std::size_t k, FieldTag f) {
  Vector v = zero_vector(n, f);
  v[k] = Scalar::one(f);
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// v += c * w
inline void axpy(Vector& v, const Scalar& c, const Vector& w) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!w[i].is_zero()) v[i] += c * w[i];
  }
}

/// Subspace of F^ambient held as a reduced row-echelon basis with strictly
/// increasing pivots and unit pivot entries.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, FieldTag f) : ambient_(ambient), field_(f) {}

  static Subspace span(const std::vector<Vector>& rows, std::size_t ambient, FieldTag f) {
    Subspace s(ambient, f);
    for (const auto& r : rows) s.insert(r);
    return s;
  }

  static Subspace whole(std::size_t ambient, FieldTag f) {
    Subspace s(ambient, f);
    for (std::size_t k = 0; k < ambient; ++k) s.insert(unit_vector(ambient, k, f));
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  FieldTag field() const { return field_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after eliminating every pivot column.
  Vector reduce(Vector v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (!c.is_zero()) axpy(v, -c, rows_[r]);
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vector& r) { return contains(r); });
  }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const Vector& v) {
    Vector w = reduce(v);
    std::size_t p = 0;
    while (p < w.size() && w[p].is_zero()) ++p;
    if (p == w.size()) return false;
    const Scalar inv = w[p].inverse();
    for (auto& x : w) {
      if (!x.is_zero()) x *= inv;
    }
    for (auto& row : rows_) {
      const Scalar c = row[p];
      if (!c.is_zero()) axpy(row, -c, w);
    }
    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  void check(const Vector& v) const {
    detail::require(v.size() == ambient_, "vector length " + std::to_string(v.size()) +
                                              " does not match ambient dimension " + std::to_string(ambient_));
  }

  std::size_t ambient_ = 0;
  FieldTag field_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of { x in F^ncols : row . x = 0 for every row }.
inline std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t ncols, FieldTag f) {
  const Subspace rref = Subspace::span(rows, ncols, f);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : rref.pivots()) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector x = unit_vector(ncols, free, f);
    for (std::size_t r = 0; r < rref.dim(); ++r) x[rref.pivots()[r]] = -rref.rows()[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  Subspace s = a;
  for (const auto& r : b.rows()) s.insert(r);
  return s;
}

inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  detail::require(a.ambient() == b.ambient(), "intersection of subspaces in different ambient spaces");
  const std::size_t ka = a.dim();
  const std::size_t kb = b.dim();
  const FieldTag f = a.field();
  // Dependencies x among the rows of a and b: sum x_i a_i + sum y_j b_j = 0.
  std::vector<Vector> transposed(a.ambient(), zero_vector(ka + kb, f));
  for (std::size_t c = 0; c < a.ambient(); ++c) {
    for (std::size_t i = 0; i < ka; ++i) transposed[c][i] = a.rows()[i][c];
    for (std::size_t j = 0; j < kb; ++j) transposed[c][ka + j] = b.rows()[j][c];
  }
  Subspace out(a.ambient(), f);
  for (const auto& dep : nullspace(transposed, ka + kb, f)) {
    Vector v = zero_vector(a.ambient(), f);
    for (std::size_t i = 0; i < ka; ++i) axpy(v, dep[i], a.rows()[i]);
    out.insert(v);
  }
  return out;
}

/// Inverse of a square matrix given by rows, or nullopt when singular.
inline std::optional<std::vector<Vector>> inverse(const std::vector<Vector>& m, FieldTag f) {
  const std::size_t n = m.size();
  std::vector<Vector> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    detail::require(m[i].size() == n, "inverse of a non-square matrix");
    aug[i] = m[i];
    aug[i].resize(2 * n, Scalar::zero(f));
    aug[i][n + i] = Scalar::one(f);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[piv], aug[col]);
    const Scalar inv = aug[col][col].inverse();
    for (auto& x : aug[col]) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar c = aug[r][col];
      if (!c.is_zero()) axpy(aug[r], -c, aug[col]);
    }
  }
  std::vector<Vector> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Vector(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  return out;
}

/// Row vector times matrix.
inline Vector row_times(const Vector& v, const std::vector<Vector>& m, FieldTag f) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  Vector out = zero_vector(cols, f);
  for (std::size_t i = 0; i < v.size(); ++i) axpy(out, v[i], m[i]);
  return out;
}

}  // namespace pclie

#endif  // PCLIE_LINALG_HPP
