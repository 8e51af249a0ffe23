#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "nilg2/matrix.hpp"
#include "nilg2/multiindex.hpp"
#include "nilg2/rational.hpp"

namespace nilg2 {

// alternating k-form on an n-dim space, dense coefficients over the
// lex-ordered basis of k-subsets of {1..n}
template <class R>
struct FormT {
  int n = 0;
  int k = 0;
  std::vector<R> c;

  FormT() = default;
  FormT(int n_, int k_) : n(n_), k(k_), c((size_t)binom(n_, k_), R(0)) {}

  R& coeff(const Idx& I) { return c[idxRank(I, n)]; }
  const R& coeff(const Idx& I) const { return c[idxRank(I, n)]; }

  bool isZero() const {
    for (const R& v : c)
      if (!(v == R(0))) return false;
    return true;
  }

  FormT operator+(const FormT& o) const {
    assert(n == o.n && k == o.k);
    FormT r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }

  FormT operator-(const FormT& o) const {
    assert(n == o.n && k == o.k);
    FormT r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }

  FormT operator-() const {
    FormT r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }

  FormT scaled(const R& s) const {
    FormT r = *this;
    for (auto& v : r.c) v = v * s;
    return r;
  }

  bool operator==(const FormT& o) const {
    return n == o.n && k == o.k && c == o.c;
  }
};

template <class R>
FormT<R> basisForm(int n, const Idx& I, const R& coeff = R(1)) {
  FormT<R> f(n, (int)I.size());
  f.coeff(I) = coeff;
  return f;
}

template <class R>
FormT<R> wedge(const FormT<R>& a, const FormT<R>& b) {
  assert(a.n == b.n);
  FormT<R> r(a.n, a.k + b.k);
  if (a.k + b.k > a.n) return FormT<R>(a.n, 0);  // degenerate; callers avoid
  auto as = allSubsets(a.n, a.k);
  auto bs = allSubsets(b.n, b.k);
  Idx M;
  for (size_t i = 0; i < as.size(); ++i) {
    if (a.c[i] == R(0)) continue;
    for (size_t j = 0; j < bs.size(); ++j) {
      if (b.c[j] == R(0)) continue;
      int s = mergeSign(as[i], bs[j], M);
      if (s == 0) continue;
      R t = a.c[i] * b.c[j];
      if (s < 0) t = -t;
      r.coeff(M) += t;
    }
  }
  return r;
}

// contraction by the basis vector e_j in the first slot
template <class R>
FormT<R> contractBasis(int j, const FormT<R>& w) {
  assert(w.k >= 1);
  FormT<R> r(w.n, w.k - 1);
  auto ws = allSubsets(w.n, w.k);
  for (size_t i = 0; i < ws.size(); ++i) {
    if (w.c[i] == R(0)) continue;
    int p = idxFind(ws[i], j);
    if (p < 0) continue;
    Idx J = ws[i];
    J.erase(J.begin() + p);
    if (p % 2 == 0)
      r.coeff(J) += w.c[i];
    else
      r.coeff(J) -= w.c[i];
  }
  return r;
}

// contraction by a general vector X = sum X_j e_j (X is 0-based over e_1..e_n)
template <class R>
FormT<R> contract(const std::vector<R>& X, const FormT<R>& w) {
  FormT<R> r(w.n, w.k - 1);
  for (int j = 1; j <= w.n; ++j) {
    if (X[j - 1] == R(0)) continue;
    r = r + contractBasis(j, w).scaled(X[j - 1]);
  }
  return r;
}

// pullback along the linear map with matrix A (columns = images of e_j):
// (A^* w)(v_1,..,v_k) = w(A v_1,..,A v_k); on basis forms
// A^* f^I = sum_J det(A[I,J]) f^J, so (A B)^* = B^* A^*
template <class R>
FormT<R> pullback(const MatrixT<R>& A, const FormT<R>& w) {
  assert(A.rows == w.n && A.cols == A.rows);
  FormT<R> r(w.n, w.k);
  if (w.k == 0) return w;
  auto subs = allSubsets(w.n, w.k);
  for (size_t i = 0; i < subs.size(); ++i) {
    if (w.c[i] == R(0)) continue;
    for (size_t j = 0; j < subs.size(); ++j) {
      R d = detGauss(A.submatrix(subs[i], subs[j]));
      if (d == R(0)) continue;
      r.c[j] += w.c[i] * d;
    }
  }
  return r;
}

// evaluate on k vectors (each 0-based coordinate list): det of the k x k
// matrix (v_b)_{i_a}
template <class R>
R evalForm(const FormT<R>& w, const std::vector<std::vector<R>>& vecs) {
  assert((int)vecs.size() == w.k);
  R total(0);
  auto subs = allSubsets(w.n, w.k);
  for (size_t i = 0; i < subs.size(); ++i) {
    if (w.c[i] == R(0)) continue;
    MatrixT<R> m(w.k, w.k);
    for (int a = 0; a < w.k; ++a)
      for (int b = 0; b < w.k; ++b) m(a, b) = vecs[b][subs[i][a] - 1];
    total += w.c[i] * detGauss(m);
  }
  return total;
}

template <class R>
FormT<double> formToDouble(const FormT<R>& w) {
  FormT<double> d(w.n, w.k);
  for (size_t i = 0; i < w.c.size(); ++i) {
    if constexpr (std::is_same_v<R, Rat>)
      d.c[i] = ratToDouble(w.c[i]);
    else
      d.c[i] = (double)w.c[i];
  }
  return d;
}

// gcd of numerators / lcm of denominators; positive. zero form -> 0
Rat formContent(const FormT<Rat>& w);

// human-readable "f123 + 2*f456" with a configurable letter
std::string formToString(const FormT<Rat>& w, const std::string& letter = "f");

using FormQ = FormT<Rat>;
using FormD = FormT<double>;

}  // namespace nilg2
