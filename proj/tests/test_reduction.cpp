#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "nilg2/reduction.hpp"

using namespace nilg2;

namespace {

bool near(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool nearForm(const FormD& a, const FormD& b, double tol = 1e-9) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!near(a.c[i], b.c[i], tol)) return false;
  return true;
}

std::vector<Rat> e7() {
  std::vector<Rat> X(7, Rat(0));
  X[6] = 1;
  return X;
}

// inclusion of forms on the quotient span {f1..f6} back into 7 dims;
// valid here because every test algebra uses X = e7 with the standard frame
FormD embed6to7(const FormD& a) {
  FormD b(7, a.k);
  for (size_t i = 0; i < a.c.size(); ++i) b.coeff(idxUnrank((long long)i, 6, a.k)) = a.c[i];
  return b;
}

ReductionTriple normalTriple(const LieAlg& g, const FormQ& eta) {
  ReductionTriple t;
  t.quotient = quotientByCentral(g, e7());
  t.X = e7();
  t.exact = true;
  t.omega = omegaNormal6();
  t.psiMinus = psiMinusNormal6();
  t.sigma = classify2Form(t.omega).sigma;
  t.eta = eta;
  t.omegaF = formToDouble(t.omega);
  t.psiMinusF = formToDouble(t.psiMinus);
  t.sigmaF = formToDouble(t.sigma);
  t.etaF = formToDouble(t.eta);
  return t;
}

}  // namespace

TEST_CASE("reduction of the flat normal structure") {
  LieAlg ab7 = LieAlg::abelian(7);
  G2Result g2 = g2FromClosed4Form(ab7, g2Phi4Normal());
  REQUIRE(g2.status == G2Status::Valid);

  ReduceResult r = reduceAlongCenter(ab7, *g2.s, e7());
  REQUIRE(r.status == ReduceStatus::Valid);
  const ReductionTriple& t = *r.t;
  REQUIRE(t.exact);
  CHECK(t.omega == omegaNormal6());
  CHECK(t.psiMinus == psiMinusNormal6());
  CHECK(t.eta == basisForm<Rat>(7, {7}));
  CHECK(t.sigma == classify2Form(omegaNormal6()).sigma);
  CHECK(nearForm(t.omegaF, formToDouble(t.omega)));
  CHECK(nearForm(t.psiMinusF, formToDouble(t.psiMinus)));
  CHECK(nearForm(t.sigmaF, formToDouble(t.sigma)));

  // the reduced pair is a valid normalized structure with closed psiMinus
  SU3Result su = su3FromPair(t.omega, t.psiMinus);
  REQUIRE(su.status == PairStatus::Valid);
  CHECK(su.s->normalized);
  CHECK(ceDifferential(t.quotient.h, t.psiMinus).isZero());
  CHECK(equationOneHolds(ab7, t.quotient, t.sigma, t.psiMinus, t.eta));
}

TEST_CASE("reduction error cases") {
  LieAlg ab7 = LieAlg::abelian(7);
  G2Result g2 = g2FromClosed4Form(ab7, g2Phi4Normal());
  REQUIRE(g2.status == G2Status::Valid);
  CHECK(reduceAlongCenter(ab7, *g2.s, std::vector<Rat>(7, Rat(0))).status ==
        ReduceStatus::NotCentral);

  LieAlg h = LieAlg::abelian(7);
  h.df[4].coeff({1, 2}) = 1;
  h.df[5].coeff({1, 5}) = 1;
  std::vector<Rat> e1(7, Rat(0));
  e1[0] = 1;
  CHECK(reduceAlongCenter(h, *g2.s, e1).status == ReduceStatus::NotCentral);
  // phi4 normal is not closed on this algebra
  CHECK(reduceAlongCenter(h, *g2.s, e7()).status == ReduceStatus::NotCocalibrated);
}

TEST_CASE("extension of the normal triple") {
  LieAlg ab7 = LieAlg::abelian(7);
  ReductionTriple t = normalTriple(ab7, basisForm<Rat>(7, {7}));
  ExtendResult r = extendToG2(ab7, t);
  REQUIRE(r.status == ExtendStatus::Valid);
  CHECK(r.s->phi4 == g2Phi4Normal());
  REQUIRE(r.s->gExact);
  CHECK(*r.s->gExact == MatQ::identity(7));
}

TEST_CASE("extension with a tilted connection form") {
  LieAlg ab7 = LieAlg::abelian(7);
  FormQ eta(7, 1);
  eta.coeff({7}) = 1;
  eta.coeff({1}) = 1;
  ReductionTriple t = normalTriple(ab7, eta);
  ExtendResult r = extendToG2(ab7, t);
  REQUIRE(r.status == ExtendStatus::Valid);
  CHECK(ceDifferential(ab7, r.s->phi4).isZero());

  // metric = pi*h + eta.eta for a normalized triple
  MatD want(7, 7);
  for (int i = 0; i < 6; ++i) want(i, i) = 1.0;
  double ec[7] = {1, 0, 0, 0, 0, 0, 1};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) want(i, j) += ec[i] * ec[j];
  for (int i = 0; i < 49; ++i) CHECK(near(r.s->g.a[i], want.a[i], 1e-8));

  // feeding the structure back recovers the triple
  ReduceResult back = reduceAlongCenter(ab7, *r.s, e7());
  REQUIRE(back.status == ReduceStatus::Valid);
  CHECK(nearForm(back.t->omegaF, t.omegaF, 1e-8));
  CHECK(nearForm(back.t->psiMinusF, t.psiMinusF, 1e-8));
  CHECK(nearForm(back.t->etaF, t.etaF, 1e-8));
  CHECK(nearForm(back.t->sigmaF, t.sigmaF, 1e-8));
  if (back.t->exact) {
    CHECK(back.t->omega == t.omega);
    CHECK(back.t->psiMinus == t.psiMinus);
    CHECK(back.t->eta == t.eta);
  }
}

TEST_CASE("round trips over transported structures") {
  LieAlg ab7 = LieAlg::abelian(7);
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> d(-2, 2);

  // unimodular transports keep the pair normalized, so the triple comes
  // back unchanged
  for (int it = 0; it < 6; ++it) {
    MatQ B6 = MatQ::identity(6);
    for (int s = 0; s < 3; ++s) {
      MatQ E = MatQ::identity(6);
      int i = std::uniform_int_distribution<int>(0, 5)(rng);
      int j = std::uniform_int_distribution<int>(0, 5)(rng);
      if (i == j) continue;
      E(i, j) = d(rng);
      B6 = B6 * E;
    }
    ReductionTriple t = normalTriple(ab7, basisForm<Rat>(7, {7}));
    t.omega = pullback(B6, omegaNormal6());
    t.psiMinus = pullback(B6, psiMinusNormal6());
    t.sigma = classify2Form(t.omega).sigma;
    t.omegaF = formToDouble(t.omega);
    t.psiMinusF = formToDouble(t.psiMinus);
    t.sigmaF = formToDouble(t.sigma);
    ExtendResult r = extendToG2(ab7, t);
    REQUIRE(r.status == ExtendStatus::Valid);
    CHECK(ceDifferential(ab7, r.s->phi4).isZero());
    ReduceResult back = reduceAlongCenter(ab7, *r.s, e7());
    REQUIRE(back.status == ReduceStatus::Valid);
    CHECK(nearForm(back.t->omegaF, t.omegaF, 1e-7));
    CHECK(nearForm(back.t->psiMinusF, t.psiMinusF, 1e-7));
    CHECK(nearForm(back.t->etaF, t.etaF, 1e-7));
  }

  // arbitrary transports break normalization; the reduced triple then
  // differs from the input, but it still reassembles the same 4-form
  int done = 0;
  while (done < 4) {
    MatQ B6(6, 6);
    for (auto& v : B6.a) v = d(rng);
    if (detGauss(B6) == 0) continue;
    ++done;
    ReductionTriple t = normalTriple(ab7, basisForm<Rat>(7, {7}));
    t.omega = pullback(B6, omegaNormal6());
    t.psiMinus = pullback(B6, psiMinusNormal6());
    t.sigma = classify2Form(t.omega).sigma;
    t.omegaF = formToDouble(t.omega);
    t.psiMinusF = formToDouble(t.psiMinus);
    t.sigmaF = formToDouble(t.sigma);
    ExtendResult r = extendToG2(ab7, t);
    REQUIRE(r.status == ExtendStatus::Valid);
    ReduceResult back = reduceAlongCenter(ab7, *r.s, e7());
    REQUIRE(back.status == ReduceStatus::Valid);

    FormD phi(7, 4);
    FormD sl = embed6to7(back.t->sigmaF);
    FormD pl = embed6to7(back.t->psiMinusF);
    phi = sl + wedge(pl, back.t->etaF);
    CHECK(nearForm(phi, formToDouble(r.s->phi4), 1e-7));
  }
}

TEST_CASE("extension failure modes") {
  LieAlg ab7 = LieAlg::abelian(7);

  // eta(X) = 0
  ReductionTriple t0 = normalTriple(ab7, basisForm<Rat>(7, {1}));
  CHECK(extendToG2(ab7, t0).status == ExtendStatus::EtaDegenerate);

  // invalid pair
  ReductionTriple tbad = normalTriple(ab7, basisForm<Rat>(7, {7}));
  tbad.psiMinus = basisForm<Rat>(6, {1, 2, 3});
  tbad.psiMinusF = formToDouble(tbad.psiMinus);
  CHECK(extendToG2(ab7, tbad).status == ExtendStatus::NotValidPair);

  // d sigma != 0 while eta is closed: equation (1) fails
  LieAlg g12 = LieAlg::abelian(7);
  g12.df[2].coeff({1, 2}) = 1;  // (0,0,12,0,0,0,0)
  ReductionTriple t1 = normalTriple(g12, basisForm<Rat>(7, {7}));
  t1.quotient = quotientByCentral(g12, e7());
  CHECK(extendToG2(g12, t1).status == ExtendStatus::EqOneViolated);

  // closed omega, closed sigma, but d psiMinus != 0: the 4-form is not closed
  LieAlg g56 = LieAlg::abelian(7);
  g56.df[5].coeff({1, 2}) = 1;  // (0,0,0,0,0,12,0)
  FormQ w(6, 2);
  w.coeff({1, 6}) = 1;
  w.coeff({2, 3}) = 1;
  w.coeff({4, 5}) = 1;
  FormQ psi(6, 3);
  psi.coeff({3, 5, 6}) = -1;
  psi.coeff({1, 2, 5}) = 1;
  psi.coeff({1, 3, 4}) = 1;
  psi.coeff({2, 4, 6}) = 1;
  ReductionTriple t2 = normalTriple(g56, basisForm<Rat>(7, {7}));
  t2.quotient = quotientByCentral(g56, e7());
  t2.omega = w;
  t2.psiMinus = psi;
  t2.sigma = classify2Form(w).sigma;
  REQUIRE(su3FromPair(w, psi).status == PairStatus::Valid);
  REQUIRE(ceDifferential(t2.quotient.h, w).isZero());
  REQUIRE(!ceDifferential(t2.quotient.h, psi).isZero());
  CHECK(extendToG2(g56, t2).status == ExtendStatus::NotClosed);
}

TEST_CASE("half-flat extension over the abelian algebra") {
  LieAlg ab6 = LieAlg::abelian(6);
  SU3Result su = su3FromPair(omegaNormal6(), psiMinusNormal6());
  REQUIRE(su.status == PairStatus::Valid);
  HalfFlatExtension ext = halfFlatExtend(ab6, *su.s);
  REQUIRE(ext.halfFlat);
  CHECK(ext.g.n == 7);
  REQUIRE(ext.ext.status == ExtendStatus::Valid);
  // the closed real part moves into the psiMinus slot
  CHECK(ext.triple.psiMinus == psiPlusNormal6());
  CHECK(ceDifferential(ext.g, ext.ext.s->phi4).isZero());
  CHECK(classify4Form7(ext.ext.s->phi4, VolQ{7, 1}, 1) == StableClass7::PiPlus);

  // not half-flat: omega fails to close on (0,0,12,13,14,15)
  LieAlg h = LieAlg::abelian(6);
  h.df[2].coeff({1, 2}) = 1;
  h.df[3].coeff({1, 3}) = 1;
  h.df[4].coeff({1, 4}) = 1;
  h.df[5].coeff({1, 5}) = 1;
  CHECK(!halfFlatExtend(h, *su.s).halfFlat);
}
