#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilg2/form.hpp"
#include "nilg2/poly.hpp"

namespace nilg2 {

// Lie algebra presented by the differentials of a coframe f^1..f^n,
// each df[i] a 2-form (d f^{i+1})
template <class R>
struct LieAlgT {
  int n = 0;
  std::vector<FormT<R>> df;

  static LieAlgT abelian(int n_) {
    LieAlgT a;
    a.n = n_;
    a.df.assign(n_, FormT<R>(n_, 2));
    return a;
  }
};

using LieAlg = LieAlgT<Rat>;

// d extended to k-forms as an antiderivation:
// d f^I = sum_p (-1)^{p-1} df^{i_p} ^ f^{I minus i_p}
template <class R>
FormT<R> ceDifferential(const LieAlgT<R>& g, const FormT<R>& w) {
  FormT<R> out(g.n, w.k + 1);
  if (w.k + 1 > g.n) return out;
  auto subs = allSubsets(g.n, w.k);
  for (size_t i = 0; i < subs.size(); ++i) {
    if (w.c[i] == R(0)) continue;
    const Idx& I = subs[i];
    for (size_t p = 0; p < I.size(); ++p) {
      Idx rest = I;
      rest.erase(rest.begin() + p);
      FormT<R> term = wedge(g.df[I[p] - 1], basisForm<R>(g.n, rest));
      R s = w.c[i];
      if (p % 2) s = -s;
      out = out + term.scaled(s);
    }
  }
  return out;
}

// d^2 = 0 on the coframe (equivalent to the Jacobi identity)
template <class R>
bool jacobiCheck(const LieAlgT<R>& g) {
  for (int i = 0; i < g.n; ++i)
    if (!ceDifferential(g, g.df[i]).isZero()) return false;
  return true;
}

// nilpotency: some coframe filtration kills d; for the presentations used
// here it suffices that d f^i only involves f^j with j < i after a
// permutation. checked via lower central series on the bracket.
bool isNilpotent(const LieAlg& g);

// [e_j, e_k] coordinates; df^i(e_j,e_k) = -f^i([e_j,e_k])
std::vector<Rat> bracket(const LieAlg& g, int j, int k);

// basis of the center {X : contraction of every df^i by X vanishes}
std::vector<std::vector<Rat>> centerBasis(const LieAlg& g);

bool isCentral(const LieAlg& g, const std::vector<Rat>& X);

// canonical basis of closed k-forms (kernel of d on degree k)
std::vector<FormQ> closedForms(const LieAlg& g, int k);

// matrix of d on degree k in the lex bases (rows: k+1 subsets, cols: k subsets)
MatQ dMatrix(const LieAlg& g, int k);

// quotient by a 1-dim central ideal spanned by X. the adapted frame is
// e_i (i != p, increasing), X last, where p is the largest index with X_p != 0
template <class R>
struct QuotientT {
  LieAlgT<R> h;       // dim n-1
  MatrixT<R> S;       // adapted frame in old coordinates (columns)
  MatrixT<R> Sinv;
  int n = 0;

  // coefficients of w in the adapted coframe
  FormT<R> adapted(const FormT<R>& w) const { return pullback(S, w); }

  bool isBasic(const FormT<R>& w) const {
    FormT<R> a = adapted(w);
    auto subs = allSubsets(n, w.k);
    for (size_t i = 0; i < subs.size(); ++i)
      if (subs[i].back() == n && !(a.c[i] == R(0))) return false;
    return true;
  }

  // push a basic form down to the quotient
  FormT<R> push(const FormT<R>& w) const {
    FormT<R> a = adapted(w);
    FormT<R> out(n - 1, w.k);
    auto subs = allSubsets(n, w.k);
    for (size_t i = 0; i < subs.size(); ++i) {
      if (subs[i].back() == n) continue;
      out.coeff(subs[i]) = a.c[i];
    }
    return out;
  }

  // pull a quotient form back up (pi^*); push(lift(t)) == t
  FormT<R> lift(const FormT<R>& tau) const {
    FormT<R> ext(n, tau.k);
    auto subs = allSubsets(n - 1, tau.k);
    for (size_t i = 0; i < subs.size(); ++i) ext.coeff(subs[i]) = tau.c[i];
    return pullback(Sinv, ext);
  }
};

using QuotientQ = QuotientT<Rat>;

template <class R>
QuotientT<R> quotientByCentral(const LieAlgT<R>& g, const std::vector<R>& X) {
  int n = g.n;
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (!(X[i] == R(0))) {
      p = i;
      break;
    }
  assert(p >= 0);
  QuotientT<R> q;
  q.n = n;
  q.S = MatrixT<R>(n, n);
  int col = 0;
  for (int i = 0; i < n; ++i) {
    if (i == p) continue;
    q.S(i, col) = R(1);
    ++col;
  }
  for (int i = 0; i < n; ++i) q.S(i, n - 1) = X[i];
  auto inv = inverse(q.S);
  assert(inv);
  q.Sinv = *inv;

  q.h.n = n - 1;
  for (int j = 0; j < n - 1; ++j) {
    FormT<R> dgj(n, 2);
    for (int i = 0; i < n; ++i) {
      if (q.Sinv(j, i) == R(0)) continue;
      dgj = dgj + g.df[i].scaled(q.Sinv(j, i));
    }
    FormT<R> a = pullback(q.S, dgj);
    FormT<R> down(n - 1, 2);
    auto subs = allSubsets(n, 2);
    for (size_t s = 0; s < subs.size(); ++s) {
      if (subs[s].back() == n) {
        assert(a.c[s] == R(0));
        continue;
      }
      down.coeff(subs[s]) = a.c[s];
    }
    q.h.df.push_back(down);
  }
  return q;
}

// direct sum with an abelian line: dim n+1, d f^{n+1} = 0
template <class R>
LieAlgT<R> extendByLine(const LieAlgT<R>& h) {
  LieAlgT<R> g;
  g.n = h.n + 1;
  for (int i = 0; i < h.n; ++i) {
    FormT<R> up(g.n, 2);
    auto subs = allSubsets(h.n, 2);
    for (size_t s = 0; s < subs.size(); ++s) up.coeff(subs[s]) = h.df[i].c[s];
    g.df.push_back(up);
  }
  g.df.push_back(FormT<R>(g.n, 2));
  return g;
}

// embed an (n-1)-form space form into n dims (same index labels)
template <class R>
FormT<R> promoteForm(const FormT<R>& w, int n) {
  FormT<R> out(n, w.k);
  auto subs = allSubsets(w.n, w.k);
  for (size_t i = 0; i < subs.size(); ++i) out.coeff(subs[i]) = w.c[i];
  return out;
}

}  // namespace nilg2
