#include "nilg2/stable6.hpp"

namespace nilg2 {

Rat lambda(const FormQ& rho) {
  MatQ K = kMatrix(rho, VolQ{6, 1});
  Rat tr(0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) tr += K(i, j) * K(j, i);
  return tr / Rat(6);
}

StableClass6 classify3Form(const FormQ& rho) {
  Rat l = lambda(rho);
  if (l < 0) return StableClass6::LambdaMinus;
  if (l > 0) return StableClass6::LambdaPlus;
  return StableClass6::NonStable;
}

Classify2 classify2Form(const FormQ& omega) {
  assert(omega.n == 6 && omega.k == 2);
  Classify2 r;
  FormQ sq = wedge(omega, omega);
  r.sigma = sq.scaled(Rat(1, 2));
  r.epsilon = wedge(sq, omega).c[0] / Rat(6);
  r.cls = (r.epsilon != 0) ? StableClass6::Lambda0 : StableClass6::NonStable;
  return r;
}

std::optional<ComplexStructure> complexStructure(const FormQ& psiMinus, const VolQ& vol) {
  MatQ K = kMatrix(psiMinus, vol);
  Rat tr(0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) tr += K(i, j) * K(j, i);
  Rat l = tr / Rat(6);
  if (!(l < 0)) return std::nullopt;
  ComplexStructure c;
  c.A = -K;
  c.lambda = l;
  c.psiPlusScaled = pullback(K, psiMinus);
  double sqrtL = std::sqrt(ratToDouble(-l));
  c.J = toDouble(c.A);
  for (auto& v : c.J.a) v /= sqrtL;
  c.psiPlus = formToDouble(c.psiPlusScaled);
  double l32 = sqrtL * sqrtL * sqrtL;
  for (auto& v : c.psiPlus.c) v /= l32;
  return c;
}

SU3Result su3FromPair(const FormQ& omega, const FormQ& psi) {
  SU3Result res;
  Classify2 c2 = classify2Form(omega);
  if (c2.cls != StableClass6::Lambda0) {
    res.status = PairStatus::NotSymplectic;
    return res;
  }
  VolQ vol{6, sgn(c2.epsilon)};
  auto cs = complexStructure(psi, vol);
  if (!cs) {
    res.status = PairStatus::NotNegativeOrbit;
    return res;
  }
  if (!wedge(omega, psi).isZero()) {
    res.status = PairStatus::NotCompatible;
    return res;
  }
  // W_{ij} = omega(e_i, e_j); hA = W A is sqrt|lambda| times the metric
  MatQ W(6, 6);
  auto subs2 = allSubsets(6, 2);
  for (auto& I : subs2) {
    Rat v = omega.coeff(I);
    W(I[0] - 1, I[1] - 1) = v;
    W(I[1] - 1, I[0] - 1) = -v;
  }
  MatQ hA = W * cs->A;
  if (!isSymmetric(hA) || !isPositiveDefinite(hA)) {
    res.status = PairStatus::NotPositive;
    return res;
  }

  SU3Structure s;
  s.omega = omega;
  s.psiMinus = psi;
  s.sigma = c2.sigma;
  s.epsilon = c2.epsilon;
  s.lambda = cs->lambda;
  s.A = cs->A;
  s.hA = hA;
  s.psiPlusScaled = cs->psiPlusScaled;

  Rat absL = -cs->lambda;
  FormQ pp = wedge(s.psiPlusScaled, psi);  // |lambda|^{3/2} psiPlus ^ psiMinus
  Rat q = pp.c[0];
  Rat want = Rat(4) * c2.epsilon;          // (2/3) omega^3
  s.normalized = (q * q == want * want * absL * absL * absL) &&
                 (sgn(q) == sgn(want));
  double l32f = std::pow(ratToDouble(absL), 1.5);
  if (s.normalized)
    s.normScale = 1.0;
  else if (sgn(q) == sgn(want))
    s.normScale = std::sqrt(ratToDouble(want) * l32f / ratToDouble(q));
  else
    s.normScale = 0.0;  // opposite signs: no positive rescale normalizes

  double sqrtL = std::sqrt(ratToDouble(absL));
  s.J = cs->J;
  s.h = toDouble(hA);
  for (auto& v : s.h.a) v /= sqrtL;
  s.psiPlus = cs->psiPlus;

  res.status = PairStatus::Valid;
  res.s = std::move(s);
  return res;
}

SU3Result su3FromPairNormalized(const FormQ& omega, const FormQ& psi) {
  SU3Result res = su3FromPair(omega, psi);
  if (res.status != PairStatus::Valid || res.s->normalized) return res;
  // psiPlus(t psi) ^ (t psi) = t^2 * psiPlus ^ psiMinus, so t^2 is rational
  FormQ pp = wedge(res.s->psiPlusScaled, psi);
  Rat absL = -res.s->lambda;
  Rat q2 = pp.c[0] * pp.c[0] / (absL * absL * absL);  // (psiPlus^psiMinus)^2
  Rat want = Rat(4) * res.s->epsilon;
  if (sgn(pp.c[0]) != sgn(want)) return res;  // no positive rescale fixes it
  auto t2 = ratSqrt(want * want / q2);
  if (!t2) return res;
  auto t = ratSqrt(*t2);
  if (!t) return res;
  return su3FromPair(omega, psi.scaled(*t));
}

bool halfFlatCheck(const LieAlg& h, const SU3Structure& s) {
  return ceDifferential(h, s.omega).isZero() &&
         ceDifferential(h, s.psiPlusScaled).isZero();
}

FormQ omegaNormal6() {
  FormQ w(6, 2);
  w.coeff({1, 2}) = 1;
  w.coeff({3, 4}) = 1;
  w.coeff({5, 6}) = 1;
  return w;
}

FormQ psiMinusNormal6() {
  FormQ w(6, 3);
  w.coeff({2, 4, 6}) = -1;
  w.coeff({1, 3, 6}) = 1;
  w.coeff({1, 4, 5}) = 1;
  w.coeff({2, 3, 5}) = 1;
  return w;
}

FormQ psiPlusNormal6() {
  FormQ w(6, 3);
  w.coeff({1, 3, 5}) = 1;
  w.coeff({1, 4, 6}) = -1;
  w.coeff({2, 3, 6}) = -1;
  w.coeff({2, 4, 5}) = -1;
  return w;
}

}  // namespace nilg2
