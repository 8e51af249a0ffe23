#pragma once

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <type_traits>
#include <vector>

#include "nilg2/multiindex.hpp"
#include "nilg2/rational.hpp"

namespace nilg2 {

template <class R>
struct MatrixT {
  int rows = 0, cols = 0;
  std::vector<R> a;

  MatrixT() = default;
  MatrixT(int r, int c) : rows(r), cols(c), a((size_t)r * c, R(0)) {}

  R& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
  const R& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }

  static MatrixT identity(int n) {
    MatrixT m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  MatrixT transpose() const {
    MatrixT t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  MatrixT operator*(const MatrixT& o) const {
    assert(cols == o.rows);
    MatrixT m(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const R& v = (*this)(i, k);
        if (v == R(0)) continue;
        for (int j = 0; j < o.cols; ++j) m(i, j) += v * o(k, j);
      }
    return m;
  }

  MatrixT operator+(const MatrixT& o) const {
    MatrixT m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
    return m;
  }

  MatrixT operator-(const MatrixT& o) const {
    MatrixT m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
    return m;
  }

  MatrixT operator-() const {
    MatrixT m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = -a[i];
    return m;
  }

  MatrixT scaled(const R& s) const {
    MatrixT m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * s;
    return m;
  }

  bool operator==(const MatrixT& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  std::vector<R> apply(const std::vector<R>& v) const {
    assert((int)v.size() == cols);
    std::vector<R> w(rows, R(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w[i] += (*this)(i, j) * v[j];
    return w;
  }

  MatrixT submatrix(const Idx& rowIdx, const Idx& colIdx) const {
    MatrixT m((int)rowIdx.size(), (int)colIdx.size());
    for (size_t i = 0; i < rowIdx.size(); ++i)
      for (size_t j = 0; j < colIdx.size(); ++j)
        m((int)i, (int)j) = (*this)(rowIdx[i] - 1, colIdx[j] - 1);
    return m;
  }
};

namespace detail {
template <class R>
bool pivotBetter(const R& cand, const R& best) {
  if constexpr (std::is_floating_point_v<R>)
    return std::abs(cand) > std::abs(best);
  else
    return best == R(0) && cand != R(0);
}
}  // namespace detail

// Gaussian elimination with division; returns det
template <class R>
R detGauss(MatrixT<R> m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  R det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (detail::pivotBetter(m(r, c), m(p, c))) p = r;
    if (m(p, c) == R(0)) return R(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == R(0)) continue;
      R f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class R>
std::optional<MatrixT<R>> inverse(MatrixT<R> m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  MatrixT<R> inv = MatrixT<R>::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (detail::pivotBetter(m(r, c), m(p, c))) p = r;
    if (m(p, c) == R(0)) return std::nullopt;
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    R piv = m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m(r, c) == R(0)) continue;
      R f = m(r, c);
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// reduced row echelon form in place; returns pivot column list (0-based)
template <class R>
std::vector<int> rref(MatrixT<R>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c) != R(0)) {
        if (p < 0 || detail::pivotBetter(m(i, c), m(p, c))) p = i;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    R piv = m(r, c);
    for (int j = 0; j < m.cols; ++j) m(r, j) /= piv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == R(0)) continue;
      R f = m(i, c);
      for (int j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// canonical kernel basis from RREF: one vector per free column,
// entry +1 at the free column
template <class R>
std::vector<std::vector<R>> kernelBasis(MatrixT<R> m) {
  int cols = m.cols;
  std::vector<int> pivots = rref(m);
  std::vector<char> isPivot(cols, 0);
  for (int c : pivots) isPivot[c] = 1;
  std::vector<std::vector<R>> basis;
  for (int c = 0; c < cols; ++c) {
    if (isPivot[c]) continue;
    std::vector<R> v(cols, R(0));
    v[c] = R(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m((int)r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class R>
int rank(MatrixT<R> m) {
  return (int)rref(m).size();
}

// leading principal minors 1..n
template <class R>
std::vector<R> leadingMinors(const MatrixT<R>& m) {
  assert(m.rows == m.cols);
  std::vector<R> out;
  for (int k = 1; k <= m.rows; ++k) {
    Idx I(k);
    for (int i = 0; i < k; ++i) I[i] = i + 1;
    out.push_back(detGauss(m.submatrix(I, I)));
  }
  return out;
}

template <class R>
bool isSymmetric(const MatrixT<R>& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

// Sylvester: all leading principal minors positive
template <class R>
bool isPositiveDefinite(const MatrixT<R>& m) {
  if (!isSymmetric(m)) return false;
  for (const R& d : leadingMinors(m))
    if (!(d > R(0))) return false;
  return true;
}

// definite of either sign: minors all positive, or strictly alternating -,+,-,...
template <class R>
bool isDefinite(const MatrixT<R>& m) {
  if (!isSymmetric(m)) return false;
  auto mins = leadingMinors(m);
  bool pos = true, neg = true;
  for (size_t k = 0; k < mins.size(); ++k) {
    if (!(mins[k] > R(0))) pos = false;
    R want = (k % 2 == 0) ? -mins[k] : mins[k];
    if (!(want > R(0))) neg = false;
  }
  return pos || neg;
}

template <class R>
MatrixT<double> toDouble(const MatrixT<R>& m) {
  MatrixT<double> d(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if constexpr (std::is_same_v<R, Rat>)
        d(i, j) = ratToDouble(m(i, j));
      else
        d(i, j) = (double)m(i, j);
    }
  return d;
}

using MatQ = MatrixT<Rat>;
using MatD = MatrixT<double>;

}  // namespace nilg2
