#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "nilg2/obstruction.hpp"
#include "nilg2/registry.hpp"
#include "nilg2/search.hpp"
#include "nilg2/stable7.hpp"

using namespace nilg2;

namespace {

LieAlg alg(const std::string& diffs, const Rat& mu = Rat(0)) {
  return instantiate(parseAlgebra(diffs), mu);
}

std::vector<Rat> e(int i) {
  std::vector<Rat> X(7, Rat(0));
  X[i - 1] = 1;
  return X;
}

std::string extensionDiffs(const std::string& diffs) {
  return diffs.substr(0, diffs.rfind(')')) + ",0)";
}

}  // namespace

TEST_CASE("the reference 4-form wins immediately where it is closed") {
  SearchConfig cfg;
  SearchReport rep;
  auto cert = witnessSearch(LieAlg::abelian(7), cfg, &rep);
  REQUIRE(cert.has_value());
  CHECK(rep.trialsRun == 1);
  CHECK(cert->phi4 == g2Phi4Normal());
  CHECK(cert->verifiedClosed);
  CHECK(cert->orientation == 1);
  CHECK(cert->minorSigns.size() == 7);
  CHECK(verifyCertificate(LieAlg::abelian(7), *cert));

  // one-relator algebra carrying the same closed reference form; the
  // witness is frozen here as a regression fixture
  LieAlg g17 = alg("(0,0,0,0,0,0,12+34+56)");
  auto c17 = witnessSearch(g17, cfg, &rep);
  REQUIRE(c17.has_value());
  CHECK(rep.trialsRun == 1);
  CHECK(c17->phi4 == g2Phi4Normal());
  CHECK(verifyCertificate(g17, *c17));
}

TEST_CASE("an obstructed algebra yields no witness at a large budget") {
  SearchConfig cfg;
  cfg.trials = 100000;
  SearchReport rep;
  auto cert = witnessSearch(alg("(0,0,0,0,12,15,0)"), cfg, &rep);
  CHECK(!cert.has_value());
  CHECK(rep.trialsRun == 100000);
  CHECK(rep.bestDefiniteMinors == 0);
}

TEST_CASE("certificates re-verify and tampering is detected") {
  LieAlg g = alg("(0,0,0,0,0,0,12+34+56)");
  auto cert = witnessSearch(g, SearchConfig{});
  REQUIRE(cert.has_value());
  CHECK(verifyCertificate(g, *cert));

  // perturbing one coefficient leaves the closed-form kernel
  ExistenceCertificate bad = *cert;
  bad.phi4.coeff({1, 2, 3, 7}) += 1;
  CHECK(!verifyCertificate(g, bad));

  // wrong algebra: the stored form is no longer closed there
  CHECK(!verifyCertificate(alg("(0,0,0,0,12,15,0)"), *cert));

  // a tampered minor list no longer matches the recomputation
  ExistenceCertificate bent = *cert;
  bent.minorSigns[3] += 1;
  CHECK(!verifyCertificate(g, bent));
}

TEST_CASE("negating the witness flips orientation but still verifies") {
  LieAlg g = LieAlg::abelian(7);
  auto cert = witnessSearch(g, SearchConfig{});
  REQUIRE(cert.has_value());

  ExistenceCertificate neg = *cert;
  neg.phi4 = neg.phi4.scaled(Rat(-1));
  CHECK(verifyCertificate(g, neg));

  auto rewrapped = certificateFromClosed4Form(g, neg.phi4);
  REQUIRE(rewrapped.has_value());
  CHECK(rewrapped->orientation == -cert->orientation);
  CHECK(verifyCertificate(g, *rewrapped));
  for (int k = 1; k <= 7; ++k) {
    Rat expect = (k % 2 == 1) ? -cert->minorSigns[k - 1] : cert->minorSigns[k - 1];
    CHECK(rewrapped->minorSigns[k - 1] == expect);
  }
}

TEST_CASE("identical configuration reproduces identical certificates") {
  LieAlg g = alg("(0,0,0,0,0,0,12+34)");
  SearchConfig cfg;
  cfg.seed = 7;
  auto a = witnessSearch(g, cfg);
  auto b = witnessSearch(g, cfg);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->phi4 == b->phi4);
  CHECK(a->kernelCoordinates == b->kernelCoordinates);
  CHECK(a->minorSigns == b->minorSigns);

  cfg.seed = 8;
  auto c = witnessSearch(g, cfg);
  REQUIRE(c.has_value());
  CHECK(verifyCertificate(g, *c));
}

TEST_CASE("parallel and serial searches agree") {
  SearchConfig cfg;
  for (const char* d : {"(0,0,0,0,0,0,0)", "(0,0,0,0,0,0,12+34)",
                        "(0,0,0,0,0,12,13)"}) {
    LieAlg g = alg(d);
    SearchReport rp, rs;
    auto p = witnessSearch(g, cfg, &rp);
    auto s = witnessSearchSerial(g, cfg, &rs);
    REQUIRE(p.has_value() == s.has_value());
    if (p) {
      CHECK(p->phi4 == s->phi4);
      CHECK(p->minorSigns == s->minorSigns);
    }
    CHECK(rp.trialsRun == rs.trialsRun);
  }
  // identical failure reports on an algebra with no witness
  cfg.trials = 2000;
  SearchReport rp, rs;
  LieAlg g = alg("(0,0,0,0,12,15,0)");
  CHECK(!witnessSearch(g, cfg, &rp).has_value());
  CHECK(!witnessSearchSerial(g, cfg, &rs).has_value());
  CHECK(rp.trialsRun == rs.trialsRun);
  CHECK(rp.bestDefiniteMinors == rs.bestDefiniteMinors);
}

TEST_CASE("no witness appears where an obstruction certificate stands") {
  SearchConfig cfg;
  cfg.trials = 2000;
  int checked = 0;
  for (const auto& entry : registry()) {
    if (entry.verdict != ExpectedVerdict::ObstructedCorollary) continue;
    if (!entry.editorial.empty() || entry.unrepaired || entry.algebra.symbolic)
      continue;
    LieAlg g = instantiate(entry.algebra);
    CorollaryResult obs = corollaryObstruction(g, e(entry.x));
    CHECK(obs.verdict == ObstructionVerdict::Obstructed);
    CHECK(!witnessSearch(g, cfg).has_value());
    if (++checked == 3) break;
  }
  CHECK(checked == 3);
}

TEST_CASE("the pair search returns the orthonormal pair on the abelian algebra") {
  SearchReport rep;
  auto s = halfFlatSearch(LieAlg::abelian(6), SearchConfig{}, &rep);
  REQUIRE(s.has_value());
  CHECK(rep.trialsRun == 1);
  CHECK(s->omega == omegaNormal6());
  CHECK(s->psiMinus == psiMinusNormal6());
  CHECK(halfFlatCheck(LieAlg::abelian(6), *s));
}

TEST_CASE("the pair search finds closed compatible pairs beyond the reference") {
  LieAlg h = alg("(0,0,0,0,12,13)");
  auto s = halfFlatSearch(h, SearchConfig{});
  REQUIRE(s.has_value());
  CHECK(halfFlatCheck(h, *s));
  CHECK(su3FromPair(s->omega, s->psiMinus).status == PairStatus::Valid);
  CHECK(ceDifferential(h, s->omega).isZero());
  CHECK(ceDifferential(h, s->psiPlusScaled).isZero());

  // same configuration, same pair
  auto s2 = halfFlatSearch(h, SearchConfig{});
  REQUIRE(s2.has_value());
  CHECK(s->omega == s2->omega);
  CHECK(s->psiMinus == s2->psiMinus);
}

TEST_CASE("pair extension and direct search cross-validate on products") {
  SearchConfig cfg;
  for (const char* d : {"(0,0,0,0,0,0)", "(0,0,0,0,12,13)", "(0,0,0,12,13,23)"}) {
    LieAlg h = alg(d);
    auto s = halfFlatSearch(h, cfg);
    REQUIRE(s.has_value());
    HalfFlatExtension ext = halfFlatExtend(h, *s);
    CHECK(ext.halfFlat);
    REQUIRE(ext.ext.s.has_value());
    auto lifted = certificateFromClosed4Form(ext.g, ext.ext.s->phi4);
    REQUIRE(lifted.has_value());
    CHECK(verifyCertificate(ext.g, *lifted));

    LieAlg g7 = alg(extensionDiffs(d));
    auto direct = witnessSearch(g7, cfg);
    REQUIRE(direct.has_value());
    CHECK(verifyCertificate(g7, *direct));
  }
}

TEST_CASE("a found pair is always valid even off the known existence rows") {
  LieAlg h = alg("(0,0,12,13,14,15)");
  SearchConfig cfg;
  cfg.trials = 25;
  auto s = halfFlatSearch(h, cfg);
  if (s) {
    CHECK(halfFlatCheck(h, *s));
    CHECK(su3FromPair(s->omega, s->psiMinus).status == PairStatus::Valid);
  }
  // the seven-dimensional extension is the authoritative existence check;
  // here it carries a standing obstruction, so the pair search failing above
  // is forced rather than a sampling miss
  LieAlg g7 = alg("(0,0,12,13,14,15,0)");
  CHECK(corollaryObstruction(g7, e(6)).verdict ==
        ObstructionVerdict::Obstructed);
  cfg.trials = 2000;
  CHECK(!witnessSearch(g7, cfg).has_value());
}

TEST_CASE("failure reports carry the trial count and the best margin") {
  SearchConfig cfg;
  cfg.trials = 30;
  SearchReport rep;
  auto s = halfFlatSearch(alg("(0,0,0,0,12,34)"), cfg, &rep);
  CHECK(!s.has_value());
  CHECK(rep.trialsRun == 30);
  CHECK(rep.bestDefiniteMinors >= 0);
  CHECK(rep.bestDefiniteMinors < 6);
}
