#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bbcell/errors.hpp"
#include "bbcell/rational.hpp"

namespace bbcell {

using VecQ = std::vector<Rational>;
using MatQ = std::vector<VecQ>;  // row major

inline MatQ mat_zero(int rows, int cols) {
  return MatQ(static_cast<size_t>(rows), VecQ(static_cast<size_t>(cols)));
}

inline MatQ mat_identity(int n) {
  MatQ m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
  return m;
}

inline MatQ mat_mul(const MatQ& a, const MatQ& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  MatQ r(n, VecQ(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) {
        if (b[t][j].is_zero()) continue;
        r[i][j] += a[i][t] * b[t][j];
      }
    }
  return r;
}

inline VecQ mat_vec(const MatQ& a, const VecQ& v) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) {
      if (a[i][j].is_zero() || v[j].is_zero()) continue;
      r[i] += a[i][j] * v[j];
    }
  return r;
}

inline bool mat_equal(const MatQ& a, const MatQ& b) { return a == b; }

inline bool vec_is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Rational mat_det(MatQ m) {
  const size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Incremental exact Gaussian elimination that tracks how each reduced row
/// was formed from the inserted vectors. Used greedily: insert vectors one
/// by one; a vector that reduces to zero is reported as dependent together
/// with the coefficients expressing it in the previously inserted ones.
class IncrementalSolver {
 public:
  explicit IncrementalSolver(int width) : width_(width) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  /// Returns std::nullopt when v is independent (and keeps it), otherwise
  /// the coefficients c with v = sum c_k * inserted_k over the accepted
  /// inserted vectors, in insertion order.
  std::optional<VecQ> insert(VecQ v) {
    VecQ combo(static_cast<size_t>(accepted_), Rational(0));
    reduce(v, combo);
    if (vec_is_zero(v)) return combo;
    size_t piv = 0;
    while (v[piv].is_zero()) ++piv;
    Rational inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    // v_reduced/p = (1/p) inserted_new - sum (combo_k/p) inserted_k
    VecQ rc(static_cast<size_t>(accepted_ + 1), Rational(0));
    for (size_t j = 0; j < combo.size(); ++j) rc[j] = -(combo[j] * inv);
    rc[static_cast<size_t>(accepted_)] = inv;
    rows_.push_back({piv, std::move(v), std::move(rc)});
    ++accepted_;
    return std::nullopt;
  }

  /// Like insert, but never stores the vector.
  std::optional<VecQ> express(VecQ v) const {
    VecQ combo(static_cast<size_t>(accepted_), Rational(0));
    reduce(v, combo);
    if (vec_is_zero(v)) return combo;
    return std::nullopt;
  }

 private:
  struct Row {
    size_t pivot;
    VecQ vec;    // reduced, pivot normalized to 1
    VecQ combo;  // vec = sum combo_k * inserted_k (combo padded to size)
  };

  void reduce(VecQ& v, VecQ& combo) const {
    for (const Row& row : rows_) {
      const Rational& f = v[row.pivot];
      if (f.is_zero()) continue;
      Rational factor = f;  // row.vec pivot is 1
      for (size_t j = 0; j < v.size(); ++j) {
        if (row.vec[j].is_zero()) continue;
        v[j] -= factor * row.vec[j];
      }
      for (size_t j = 0; j < row.combo.size(); ++j) {
        if (row.combo[j].is_zero()) continue;
        combo[j] += factor * row.combo[j];
      }
    }
  }

  int width_;
  int accepted_ = 0;
  std::vector<Row> rows_;
};

/// Characteristic polynomial coefficients by the Faddeev-LeVerrier
/// recurrence: returns c with p(L) = L^n + c[0] L^{n-1} + ... + c[n-1].
inline VecQ charpoly_coeffs(const MatQ& m) {
  const int n = static_cast<int>(m.size());
  VecQ c(static_cast<size_t>(n));
  MatQ nk = mat_zero(n, n);
  for (int k = 1; k <= n; ++k) {
    // nk = m * (nk + c_{k-1} I)
    MatQ tmp = nk;
    if (k > 1) {
      const Rational& prev = c[static_cast<size_t>(k - 2)];
      for (int i = 0; i < n; ++i)
        tmp[static_cast<size_t>(i)][static_cast<size_t>(i)] += prev;
    }
    nk = (k == 1) ? m : mat_mul(m, tmp);
    Rational tr(0);
    for (int i = 0; i < n; ++i)
      tr += nk[static_cast<size_t>(i)][static_cast<size_t>(i)];
    c[static_cast<size_t>(k - 1)] = -(tr / Rational(k));
  }
  return c;
}

}  // namespace bbcell
