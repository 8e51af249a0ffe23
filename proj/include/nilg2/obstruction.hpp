#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilg2/hodge.hpp"
#include "nilg2/liealg.hpp"
#include "nilg2/poly.hpp"
#include "nilg2/stable6.hpp"

namespace nilg2 {

// closed 4-forms as the kernel of d, one basis form per free coordinate of
// the row-reduced system, together with the linear conditions cutting the
// space out (each row r reads sum_I r_I phi_I = 0)
struct Closed4 {
  std::vector<FormQ> basis;
  std::vector<Idx> freeIdx;
  std::vector<FormQ> constraints;
};
Closed4 closed4Forms(const LieAlg& g);

std::string constraintString(const FormQ& row);

// image of the closed 4-forms under phi -> pi_*(-iota_X phi). keeps the
// rank-increasing images in coordinate order; every parameter is named
// after the free 4-form coordinate feeding it
struct Z3Space {
  QuotientQ quotient;
  std::vector<FormQ> basis;
  std::vector<std::string> names;
};
Z3Space z3Space(const LieAlg& g, const std::vector<Rat>& X);

struct LambdaPolynomial {
  std::vector<std::string> parameters;
  Poly poly;  // homogeneous quartic in the parameters
  VolQ volRef{6, 1};
};
LambdaPolynomial lambdaPolynomial(const Z3Space& z);

struct PerfectSquareCert {
  Rat factor;  // positive, factor * root^2 == poly
  Poly root;
};
struct NegativeWitnessCert {
  std::vector<Rat> point;
  Rat value;  // exact evaluation, negative
};
struct Lemma2Cert {
  std::vector<int> W;
  std::vector<std::string> closednessConstraints;
  std::vector<std::string> invariancePattern;  // '0' marks an identically zero entry
  std::string forcedZeroComponent;
};

enum class ObstructionVerdict { Obstructed, NotObstructed, Inconclusive, Inapplicable };

struct CorollaryConfig {
  uint64_t seed = 1;
  int samples = 100000;
};

struct CorollaryResult {
  ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;
  Z3Space z3;
  std::optional<LambdaPolynomial> lambda;       // present on the square-root path
  std::optional<PerfectSquareCert> square;      // Obstructed
  std::optional<NegativeWitnessCert> negative;  // NotObstructed
  std::optional<FormQ> witness;                 // 3-form with lambda < 0
};

// no cocalibrated structure exists when lambda >= 0 on all of Z3_X; the
// nonnegativity is certified by an exact square decomposition, refuted by an
// exact negative sample, and otherwise left open
CorollaryResult corollaryObstruction(const LieAlg& g, const std::vector<Rat>& X,
                                     const CorollaryConfig& cfg = {});

struct Lemma2Result {
  ObstructionVerdict verdict = ObstructionVerdict::Inapplicable;
  std::optional<Lemma2Cert> cert;
};

// symbolic run over free closed-form parameters t and free connection
// coefficients c: obstructed when closedness forces W to be invariant under
// the induced complex structure while the sigma component on W vanishes
Lemma2Result lemma2Obstruction(const LieAlg& g, const std::vector<Rat>& X,
                               const std::vector<int>& W = {3, 4, 5, 6});

}  // namespace nilg2
