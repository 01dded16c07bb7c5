#pragma once

// Dense Gaussian elimination over Scalar. Matrices here are tiny (graded
// pieces of desk-scale quotients), so row-major vectors are fine.

#include <cstddef>
#include <vector>

#include "splitci/error.hpp"
#include "splitci/scalar.hpp"

namespace splitci {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

inline Matrix identity_matrix(const FieldSpec& field, std::size_t n) {
  Matrix m(n, Vector(n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(field);
  return m;
}

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const Scalar inv = m[r][c].inv();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar factor = m[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!m[r][k].is_zero()) m[i][k] -= factor * m[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

/// Basis of { v : m v = 0 } for a rows x cols matrix.
inline std::vector<Vector> nullspace(Matrix m, std::size_t cols, const FieldSpec& field) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Scalar::zero(field));
    v[free] = Scalar::one(field);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Scalar determinant(Matrix m, const FieldSpec& field) {
  const std::size_t n = m.size();
  Scalar det = Scalar::one(field);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c].is_zero()) ++sel;
    if (sel == n) return Scalar::zero(field);
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Scalar inv = m[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Scalar factor = m[i][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[i][k] -= factor * m[c][k];
    }
  }
  return det;
}

inline Matrix inverse(const Matrix& m, const FieldSpec& field) {
  const std::size_t n = m.size();
  Matrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
    aug[i] = m[i];
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Scalar::one(field) : Scalar::zero(field));
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots.back() >= n)) {
    throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  }
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  return out;
}

inline Matrix multiply(const Matrix& a, const Matrix& b, const FieldSpec& field) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  Matrix out(a.size(), Vector(cols, Scalar::zero(field)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace splitci
