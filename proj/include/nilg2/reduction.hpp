#pragma once

#include "nilg2/stable6.hpp"
#include "nilg2/stable7.hpp"

namespace nilg2 {

// data of a circle-type reduction: quotient map, connection form eta on g,
// and the induced pair on the 6-dim quotient h
struct ReductionTriple {
  QuotientQ quotient;
  std::vector<Rat> X;
  bool exact = false;            // exact fields populated
  FormQ omega, psiMinus, sigma;  // forms on h
  FormQ eta;                     // 1-form on g
  FormD omegaF, psiMinusF, sigmaF, etaF;  // float mirrors, always set
};

enum class ReduceStatus { Valid, NotCentral, NotCocalibrated };

struct ReduceResult {
  ReduceStatus status = ReduceStatus::NotCentral;
  std::optional<ReductionTriple> t;
};

// quotient of a cocalibrated structure along a central X:
// eta = metric dual of X/|X|, psiMinus = pushdown of -iota_X phi4 / |X|,
// sigma = pushdown of phi4 + iota_X phi4 ^ eta / |X|, omega from iota_X *phi4.
// the result is exact when the metric is exact and |X|, sqrt(det g) rational
ReduceResult reduceAlongCenter(const LieAlg& g, const G2Structure& s,
                               const std::vector<Rat>& X);

enum class ExtendStatus {
  Valid,
  NotValidPair,
  EqOneViolated,
  EtaDegenerate,   // eta(X) = 0
  NotClosed,       // d psiMinus != 0 on h shows up here
  NotStablePositive,
};

struct ExtendResult {
  ExtendStatus status = ExtendStatus::NotValidPair;
  std::optional<G2Structure> s;
};

// d(pi* sigma) = (pi* psiMinus) ^ d eta over g
bool equationOneHolds(const LieAlg& g, const QuotientQ& q, const FormQ& sigma,
                      const FormQ& psiMinus, const FormQ& eta);

// phi4 = pi* sigma + (pi* psiMinus) ^ eta; requires a valid pair on h,
// equation (1), and eta(X) != 0; closedness needs d psiMinus = 0 on h
ExtendResult extendToG2(const LieAlg& g, const ReductionTriple& t,
                        int orientation = 1);

// trivial extension h + R e7 of a half-flat structure, with the closed form
// of the pair moved into the psiMinus slot
struct HalfFlatExtension {
  bool halfFlat = false;
  LieAlg g;                 // h + R e7
  ReductionTriple triple;   // eta = f7, X = e7
  ExtendResult ext;
};

HalfFlatExtension halfFlatExtend(const LieAlg& h, const SU3Structure& s);

}  // namespace nilg2
