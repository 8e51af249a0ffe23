#pragma once

#include "nilg2/form.hpp"

namespace nilg2 {

// oriented reference: the volume form is sign * sqrt(det g) * f^{1..n},
// so only the orientation relative to f^{1..n} is stored
template <class R>
struct VolumeT {
  int n = 0;
  int sign = 1;
};

using VolQ = VolumeT<Rat>;
using VolD = VolumeT<double>;

// inner product of k-forms induced by the metric g on V (matrix in e-basis):
// <f^I, f^J> = det(G[I,J]) with G = g^{-1}
template <class R>
R formInner(const FormT<R>& a, const FormT<R>& b, const MatrixT<R>& ginv) {
  assert(a.n == b.n && a.k == b.k);
  R total(0);
  auto subs = allSubsets(a.n, a.k);
  for (size_t i = 0; i < subs.size(); ++i) {
    if (a.c[i] == R(0)) continue;
    for (size_t j = 0; j < subs.size(); ++j) {
      if (b.c[j] == R(0)) continue;
      total += a.c[i] * b.c[j] * detGauss(ginv.submatrix(subs[i], subs[j]));
    }
  }
  return total;
}

// sqrt(det g); the exact instantiation requires det g to be a rational square
inline Rat metricVolumeCoeff(const MatQ& g) {
  auto r = ratSqrt(detGauss(g));
  assert(r && "metric volume is irrational; use the double path");
  return *r;
}

inline double metricVolumeCoeff(const MatD& g) { return std::sqrt(detGauss(g)); }

// star operator defined by a ^ (*b) = <a,b>_g vol_g with
// vol_g = vol.sign * sqrt(det g) * f^{1..n}
template <class R>
FormT<R> hodgeStar(const FormT<R>& b, const MatrixT<R>& g, const VolumeT<R>& vol) {
  assert(b.n == g.rows && b.n == vol.n);
  auto ginvOpt = inverse(g);
  assert(ginvOpt);
  const MatrixT<R>& G = *ginvOpt;
  R scale = metricVolumeCoeff(g);
  if (vol.sign < 0) scale = -scale;
  int n = b.n, k = b.k;
  FormT<R> s(n, n - k);
  auto subs = allSubsets(n, k);
  for (size_t i = 0; i < subs.size(); ++i) {
    R val(0);
    for (size_t j = 0; j < subs.size(); ++j) {
      if (b.c[j] == R(0)) continue;
      val += b.c[j] * detGauss(G.submatrix(subs[i], subs[j]));
    }
    if (val == R(0)) continue;
    int sg = splitSign(subs[i], n);
    Idx C = idxComplement(subs[i], n);
    R t = scale * val;
    if (sg < 0) t = -t;
    s.coeff(C) = t;
  }
  return s;
}

}  // namespace nilg2
