// Copyright the supergrade developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * Exact dense linear algebra over cyclotomic scalars.
 *
 * Row reduction uses fraction-free forward elimination (cross-multiplication,
 * no division) followed by exact back-substitution that normalizes pivots to
 * one.  Pivot choice is always the first nonzero entry, never a magnitude
 * heuristic, so results are deterministic and canonical.
 *
 * Subspaces are stored as reduced-row-echelon bases with zero rows stripped;
 * two subspaces are equal iff their canonical bases are identical.
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "supergrade/cyclotomic.hpp"

namespace supergrade {

using Vec = std::vector<CycScalar>;
using MatRows = std::vector<Vec>;

inline Vec vec_zero(std::size_t n) { return Vec(n, CycScalar(0)); }

inline Vec vec_add(const Vec &a, const Vec &b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec vec_sub(const Vec &a, const Vec &b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Vec vec_scale(const CycScalar &s, const Vec &a) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

inline bool vec_is_zero(const Vec &a) {
  for (const auto &x : a)
    if (!x.is_zero()) return false;
  return true;
}

struct RrefResult {
  MatRows rows;                 // same row count as input, zero rows at the bottom
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
};

/** Reduced row echelon form; exact, deterministic, heuristic-free. */
inline RrefResult rref(MatRows rows) {
  RrefResult out;
  if (rows.empty()) return {std::move(rows), {}};
  const std::size_t ncols = rows[0].size();
  for (const auto &r : rows)
    if (r.size() != ncols) throw std::invalid_argument("rref: ragged matrix");

  std::size_t rank = 0;
  // fraction-free forward pass
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const Vec pivot_row = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const CycScalar f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        rows[i][j] = pivot_row[c] * rows[i][j] - f * pivot_row[j];
    }
    out.pivot_cols.push_back(c);
    ++rank;
  }
  // exact back-substitution: normalize pivots, clear above
  for (std::size_t r = rank; r-- > 0;) {
    const std::size_t c = out.pivot_cols[r];
    const CycScalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] = inv * rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][c].is_zero()) continue;
      const CycScalar f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    if (r == 0) break;
  }
  out.rows = std::move(rows);
  return out;
}

inline std::size_t rank_of(const MatRows &rows) { return rref(rows).pivot_cols.size(); }

/**
 * Basis of the right kernel {v : M v = 0}, one vector per free column,
 * in increasing free-column order.  Exactness: M v = 0 holds identically.
 */
inline MatRows nullspace(const MatRows &m) {
  if (m.empty()) return {};
  const std::size_t ncols = m[0].size();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  MatRows basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = vec_zero(ncols);
    v[f] = CycScalar(1);
    for (std::size_t rr = 0; rr < r.pivot_cols.size(); ++rr)
      v[r.pivot_cols[rr]] = -r.rows[rr][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/** Inverse of a square matrix, or nullopt when singular. */
inline std::optional<MatRows> invert(const MatRows &m) {
  const std::size_t n = m.size();
  MatRows aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("invert: matrix not square");
    aug[i] = m[i];
    aug[i].resize(2 * n, CycScalar(0));
    aug[i][n + i] = CycScalar(1);
  }
  RrefResult r = rref(std::move(aug));
  if (r.pivot_cols.size() != n || r.pivot_cols.back() != n - 1) return std::nullopt;
  MatRows inv(n);
  for (std::size_t i = 0; i < n; ++i)
    inv[i] = Vec(r.rows[i].begin() + n, r.rows[i].end());
  return inv;
}

/**
 * Express w in a given (not necessarily independent) spanning list, if
 * possible.  Returns coefficients x with sum x_i v_i = w.
 */
inline std::optional<Vec> solve_coordinates(const MatRows &vectors, const Vec &w) {
  const std::size_t n = w.size();
  for (const auto &v : vectors)
    if (v.size() != n) throw std::invalid_argument("solve_coordinates: size mismatch");
  // Solve A x = w where columns of A are the vectors: run rref on [A | w]^rows.
  MatRows rows(n, vec_zero(vectors.size() + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < vectors.size(); ++j) rows[i][j] = vectors[j][i];
    rows[i][vectors.size()] = w[i];
  }
  RrefResult r = rref(std::move(rows));
  Vec x(vectors.size(), CycScalar(0));
  for (std::size_t rr = 0; rr < r.pivot_cols.size(); ++rr) {
    if (r.pivot_cols[rr] == vectors.size()) return std::nullopt;  // inconsistent
    x[r.pivot_cols[rr]] = r.rows[rr][vectors.size()];
  }
  return x;
}

/** A linear subspace in canonical reduced-echelon form. */
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const MatRows &vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    for (const auto &v : vectors)
      if (v.size() != ambient_dim)
        throw std::invalid_argument("Subspace::span: wrong ambient dimension");
    RrefResult r = rref(vectors);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) s.basis_.push_back(r.rows[i]);
    s.pivots_ = std::move(r.pivot_cols);
    return s;
  }

  static Subspace full(std::size_t ambient_dim) {
    MatRows id(ambient_dim, vec_zero(ambient_dim));
    for (std::size_t i = 0; i < ambient_dim; ++i) id[i][i] = CycScalar(1);
    return span(ambient_dim, id);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const MatRows &basis() const { return basis_; }

  /** Residual of v after elimination against the canonical basis. */
  Vec reduce(Vec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("reduce: wrong ambient dimension");
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const CycScalar &c = v[pivots_[r]];
      if (c.is_zero()) continue;
      const CycScalar f = c;  // pivot is 1
      for (std::size_t j = pivots_[r]; j < ambient_; ++j) v[j] = v[j] - f * basis_[r][j];
    }
    return v;
  }

  bool contains(const Vec &v) const { return vec_is_zero(reduce(v)); }

  bool contains(const Subspace &other) const {
    if (other.ambient_ != ambient_) return false;
    for (const auto &v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace &a, const Subspace &b) {
    if (a.ambient_ != b.ambient_ || a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
      if (a.basis_[i] != b.basis_[i]) return false;
    return true;
  }
  friend bool operator!=(const Subspace &a, const Subspace &b) { return !(a == b); }

  friend Subspace operator+(const Subspace &a, const Subspace &b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("sum: ambient mismatch");
    MatRows rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    return span(a.ambient_, rows);
  }

  /** Intersection via the kernel of the stacked coefficient matrix. */
  friend Subspace intersect(const Subspace &a, const Subspace &b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
    // columns: coefficients (x, y) with sum x_i a_i - sum y_j b_j = 0
    MatRows rows(a.ambient_, vec_zero(a.dim() + b.dim()));
    for (std::size_t i = 0; i < a.ambient_; ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) rows[i][j] = a.basis_[j][i];
      for (std::size_t j = 0; j < b.dim(); ++j) rows[i][a.dim() + j] = -b.basis_[j][i];
    }
    MatRows combos = nullspace(rows);
    MatRows vecs;
    for (const auto &combo : combos) {
      Vec v = vec_zero(a.ambient_);
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (!combo[j].is_zero()) v = vec_add(v, vec_scale(combo[j], a.basis_[j]));
      vecs.push_back(std::move(v));
    }
    return span(a.ambient_, vecs);
  }

 private:
  std::size_t ambient_;
  MatRows basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace supergrade
