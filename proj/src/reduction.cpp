#include "nilg2/reduction.hpp"

#include <cmath>

namespace nilg2 {

namespace {

FormD pushF(const QuotientQ& q, const FormD& w) {
  FormD a = pullback(toDouble(q.S), w);
  FormD out(q.n - 1, w.k);
  auto subs = allSubsets(q.n, w.k);
  for (size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].back() == q.n) continue;
    out.coeff(subs[i]) = a.c[i];
  }
  return out;
}

std::vector<double> toDoubleVec(const std::vector<Rat>& v) {
  std::vector<double> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = ratToDouble(v[i]);
  return r;
}

FormQ oneForm(const std::vector<Rat>& coeffs) {
  FormQ w((int)coeffs.size(), 1);
  for (size_t i = 0; i < coeffs.size(); ++i) w.c[i] = coeffs[i];
  return w;
}

}  // namespace

ReduceResult reduceAlongCenter(const LieAlg& g, const G2Structure& s,
                               const std::vector<Rat>& X) {
  ReduceResult res;
  bool zero = true;
  for (auto& x : X)
    if (x != 0) zero = false;
  if (zero || !isCentral(g, X)) {
    res.status = ReduceStatus::NotCentral;
    return res;
  }
  if (!ceDifferential(g, s.phi4).isZero()) {
    res.status = ReduceStatus::NotCocalibrated;
    return res;
  }

  ReductionTriple t;
  t.quotient = quotientByCentral(g, X);
  t.X = X;

  FormQ iXphi = contract(X, s.phi4);

  // float path
  auto Xd = toDoubleVec(X);
  std::vector<double> gX(7, 0.0);
  double n2 = 0;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) gX[i] += s.g(i, j) * Xd[j];
    n2 += gX[i] * Xd[i];
  }
  double nrm = std::sqrt(n2);
  FormD etaF(7, 1);
  for (int i = 0; i < 7; ++i) etaF.c[i] = gX[i] / nrm;
  t.etaF = etaF;
  FormD iXphiF = formToDouble(iXphi);
  t.psiMinusF = pushF(t.quotient, iXphiF.scaled(-1.0 / nrm));
  t.sigmaF = pushF(t.quotient, formToDouble(s.phi4) +
                                   wedge(iXphiF, etaF).scaled(1.0 / nrm));
  t.omegaF = pushF(t.quotient, contract(Xd, s.phi3).scaled(1.0 / nrm));

  // exact path: rational metric, rational |X| and volume
  if (s.gExact) {
    const MatQ& G = *s.gExact;
    std::vector<Rat> gXq(7, Rat(0));
    Rat n2q(0);
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) gXq[i] += G(i, j) * X[j];
      n2q += gXq[i] * X[i];
    }
    auto nrmQ = ratSqrt(n2q);
    auto volQ = ratSqrt(detGauss(G));
    if (nrmQ && volQ) {
      t.exact = true;
      std::vector<Rat> etaC(7);
      for (int i = 0; i < 7; ++i) etaC[i] = gXq[i] / *nrmQ;
      t.eta = oneForm(etaC);
      t.psiMinus = t.quotient.push(iXphi.scaled(Rat(-1) / *nrmQ));
      t.sigma = t.quotient.push(s.phi4 + wedge(iXphi, t.eta).scaled(Rat(1) / *nrmQ));
      FormQ phi3 = hodgeStar(s.phi4, G, VolQ{7, s.orientation});
      t.omega = t.quotient.push(contract(X, phi3).scaled(Rat(1) / *nrmQ));
    }
  }

  res.status = ReduceStatus::Valid;
  res.t = std::move(t);
  return res;
}

bool equationOneHolds(const LieAlg& g, const QuotientQ& q, const FormQ& sigma,
                      const FormQ& psiMinus, const FormQ& eta) {
  FormQ lhs = ceDifferential(g, q.lift(sigma));
  FormQ rhs = wedge(q.lift(psiMinus), ceDifferential(g, eta));
  return lhs == rhs;
}

ExtendResult extendToG2(const LieAlg& g, const ReductionTriple& t,
                        int orientation) {
  assert(t.exact);
  ExtendResult res;
  SU3Result pair = su3FromPair(t.omega, t.psiMinus);
  if (pair.status != PairStatus::Valid) {
    res.status = ExtendStatus::NotValidPair;
    return res;
  }
  Rat etaX(0);
  for (int i = 0; i < g.n; ++i) etaX += t.eta.c[i] * t.X[i];
  if (etaX == 0) {
    res.status = ExtendStatus::EtaDegenerate;
    return res;
  }
  const FormQ& sigma = pair.s->sigma;
  if (!equationOneHolds(g, t.quotient, sigma, t.psiMinus, t.eta)) {
    res.status = ExtendStatus::EqOneViolated;
    return res;
  }
  FormQ phi4 = t.quotient.lift(sigma) + wedge(t.quotient.lift(t.psiMinus), t.eta);
  G2Result g2 = g2FromClosed4Form(g, phi4, orientation);
  switch (g2.status) {
    case G2Status::Valid:
      res.status = ExtendStatus::Valid;
      res.s = std::move(g2.s);
      break;
    case G2Status::NotClosed:
      res.status = ExtendStatus::NotClosed;
      break;
    case G2Status::NotStablePositive:
      res.status = ExtendStatus::NotStablePositive;
      break;
  }
  return res;
}

HalfFlatExtension halfFlatExtend(const LieAlg& h, const SU3Structure& s) {
  HalfFlatExtension out;
  out.halfFlat = halfFlatCheck(h, s);
  if (!out.halfFlat) return out;
  out.g = extendByLine(h);
  std::vector<Rat> X(7, Rat(0));
  X[6] = 1;

  ReductionTriple t;
  t.quotient = quotientByCentral(out.g, X);
  t.X = X;
  t.exact = true;
  t.omega = s.omega;
  FormQ rotated = s.psiPlusScaled;
  Rat c = formContent(rotated);
  if (c != 0) rotated = rotated.scaled(Rat(1) / c);
  t.psiMinus = rotated;
  t.sigma = classify2Form(t.omega).sigma;
  t.eta = basisForm<Rat>(7, {7});
  t.omegaF = formToDouble(t.omega);
  t.psiMinusF = formToDouble(t.psiMinus);
  t.sigmaF = formToDouble(t.sigma);
  t.etaF = formToDouble(t.eta);
  out.triple = t;
  out.ext = extendToG2(out.g, t);
  return out;
}

}  // namespace nilg2
