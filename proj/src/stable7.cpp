#include "nilg2/stable7.hpp"

#include <cmath>

namespace nilg2 {

namespace {

double ninthRoot(double x) {
  return x < 0 ? -std::pow(-x, 1.0 / 9.0) : std::pow(x, 1.0 / 9.0);
}

struct DualMetric {
  StableClass7 cls;
  MatQ B;
  Rat detB;
};

DualMetric classifyB(const MatQ& B) {
  DualMetric d{StableClass7::NonStable, B, detGauss(B)};
  if (d.detB == 0) return d;
  d.cls = isDefinite(B) ? StableClass7::PiPlus : StableClass7::PiMinus;
  return d;
}

Metric7 metricFromB(const MatQ& B, const Rat& detB) {
  Metric7 m;
  m.B = B;
  m.detB = detB;
  Rat six7 = Rat(279936);  // 6^7
  m.eps = 3.0 * ninthRoot(ratToDouble(detB / six7));
  m.g = toDouble(B);
  for (auto& v : m.g.a) v /= 2.0 * m.eps;
  if (auto r = ratNinthRoot(detB / six7)) {
    m.epsExact = Rat(3) * *r;
    m.gExact = B.scaled(Rat(1) / (Rat(2) * *m.epsExact));
  }
  return m;
}

}  // namespace

StableClass7 classify3Form7(const FormQ& phi, const VolQ& vol) {
  return classifyB(bMatrix(phi, vol)).cls;
}

std::optional<Metric7> metric7(const FormQ& phi, const VolQ& vol) {
  MatQ B = bMatrix(phi, vol);
  Rat d = detGauss(B);
  if (d == 0) return std::nullopt;
  return metricFromB(B, d);
}

FormQ fourFormAsThreeVector(const FormQ& phi4, const VolQ& vol) {
  assert(phi4.n == 7 && phi4.k == 4);
  FormQ t(7, 3);
  auto subs = allSubsets(7, 3);
  for (auto& P : subs) {
    Idx C = idxComplement(P, 7);
    Idx merged;
    int s = mergeSign(P, C, merged);
    Rat v = phi4.coeff(C) * s;
    if (vol.sign < 0) v = -v;
    t.coeff(P) = v;
  }
  return t;
}

StableClass7 classify4Form7(const FormQ& phi4, const VolQ& vol, int orientation) {
  (void)orientation;
  FormQ t = fourFormAsThreeVector(phi4, vol);
  return classifyB(bMatrix(t, VolQ{7, vol.sign})).cls;
}

G2Result g2FromClosed4Form(const LieAlg& g, const FormQ& phi4, int orientation) {
  G2Result res;
  if (!ceDifferential(g, phi4).isZero()) {
    res.status = G2Status::NotClosed;
    return res;
  }
  VolQ vol{7, 1};
  FormQ t = fourFormAsThreeVector(phi4, vol);
  DualMetric d = classifyB(bMatrix(t, vol));
  if (d.cls != StableClass7::PiPlus) {
    res.status = G2Status::NotStablePositive;
    return res;
  }
  G2Structure s;
  s.phi4 = phi4;
  s.Btilde = d.B;
  s.detBtilde = d.detB;
  s.orientation = orientation;
  Metric7 dual = metricFromB(d.B, d.detB);  // metric on V*
  s.eps = dual.eps;
  s.epsExact = dual.epsExact;
  auto ginv = inverse(dual.g);
  assert(ginv);
  s.g = *ginv;
  if (dual.gExact) {
    auto ge = inverse(*dual.gExact);
    assert(ge);
    s.gExact = *ge;
  }
  s.phi3 = hodgeStar(formToDouble(phi4), s.g, VolD{7, orientation});
  res.status = G2Status::Valid;
  res.s = std::move(s);
  return res;
}

FormQ g2Phi3Normal() {
  FormQ w(7, 3);
  w.coeff({1, 2, 7}) = 1;
  w.coeff({3, 4, 7}) = 1;
  w.coeff({5, 6, 7}) = 1;
  w.coeff({1, 3, 5}) = 1;
  w.coeff({1, 4, 6}) = -1;
  w.coeff({2, 3, 6}) = -1;
  w.coeff({2, 4, 5}) = -1;
  return w;
}

FormQ g2Phi4Normal() {
  FormQ w(7, 4);
  w.coeff({1, 2, 3, 4}) = 1;
  w.coeff({1, 2, 5, 6}) = 1;
  w.coeff({3, 4, 5, 6}) = 1;
  w.coeff({2, 4, 6, 7}) = -1;
  w.coeff({1, 3, 6, 7}) = 1;
  w.coeff({1, 4, 5, 7}) = 1;
  w.coeff({2, 3, 5, 7}) = 1;
  return w;
}

}  // namespace nilg2
