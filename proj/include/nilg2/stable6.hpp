#pragma once

#include <optional>

#include "nilg2/hodge.hpp"
#include "nilg2/liealg.hpp"

namespace nilg2 {

enum class StableClass6 { Lambda0, LambdaPlus, LambdaMinus, NonStable };

// K endomorphism of a 3-form rho, defined relative to the oriented reference
// volume by  iota_x rho ^ rho = iota_{Kx} vol.  Replacing vol by s*vol
// replaces K by K/s.
template <class R>
MatrixT<R> kMatrix(const FormT<R>& rho, const VolumeT<R>& vol) {
  assert(rho.n == 6 && rho.k == 3 && vol.n == 6);
  MatrixT<R> K(6, 6);
  Idx full{1, 2, 3, 4, 5, 6};
  for (int j = 1; j <= 6; ++j) {
    FormT<R> five = wedge(contractBasis(j, rho), rho);
    for (int i = 1; i <= 6; ++i) {
      Idx rest = full;
      rest.erase(rest.begin() + (i - 1));
      R v = five.coeff(rest);
      if (i % 2 == 0) v = -v;
      if (vol.sign < 0) v = -v;
      K(i - 1, j - 1) = v;
    }
  }
  return K;
}

// quartic invariant tr(K^2)/6; its sign does not depend on the orientation
Rat lambda(const FormQ& rho);

StableClass6 classify3Form(const FormQ& rho);

struct Classify2 {
  StableClass6 cls = StableClass6::NonStable;
  FormQ sigma;  // omega^2 / 2
  Rat epsilon;  // (1/6) omega^3 = epsilon * f^{123456}
};

Classify2 classify2Form(const FormQ& omega);

// complex structure induced by a 3-form with lambda < 0: the exact companion
// A satisfies A^2 = lambda * Id and J = A / sqrt|lambda| squares to -Id;
// psiPlusScaled = |lambda|^{3/2} * psiPlus completes rho to a complex volume
struct ComplexStructure {
  MatQ A;
  Rat lambda;
  FormQ psiPlusScaled;
  MatD J;
  FormD psiPlus;
};

std::optional<ComplexStructure> complexStructure(const FormQ& psiMinus, const VolQ& vol);

enum class PairStatus {
  Valid,
  NotSymplectic,     // omega^3 = 0
  NotNegativeOrbit,  // lambda(psi) >= 0
  NotCompatible,     // omega ^ psi != 0
  NotPositive,       // induced symmetric form not positive definite
};

struct SU3Structure {
  FormQ omega, psiMinus;
  FormQ sigma;           // omega^2 / 2
  Rat epsilon;           // (1/6) omega^3 coefficient, fixes the orientation
  Rat lambda;            // < 0
  MatQ A;                // exact companion, A^2 = lambda * Id
  MatQ hA;               // exact: matrix of omega(x, Ay) = sqrt|lambda| * h
  FormQ psiPlusScaled;   // exact: |lambda|^{3/2} * psiPlus
  bool normalized;       // psiPlus ^ psiMinus == (2/3) omega^3
  double normScale;      // positive t with (omega, t*psiMinus) normalized
  MatD J;                // A / sqrt|lambda|
  MatD h;                // h(x,y) = omega(x, J y)
  FormD psiPlus;
};

struct SU3Result {
  PairStatus status = PairStatus::NotSymplectic;
  std::optional<SU3Structure> s;
};

// checks, in order: omega^3 != 0, psi in the negative orbit,
// omega ^ psi = 0, induced form positive definite; the K-construction is
// taken relative to the orientation of omega^3
SU3Result su3FromPair(const FormQ& omega, const FormQ& psi);

// rescales psiMinus to enforce psiPlus ^ psiMinus = (2/3) omega^3 when the
// required scale is rational; otherwise returns the input structure with
// normScale recording the (irrational) scale for float consumers
SU3Result su3FromPairNormalized(const FormQ& omega, const FormQ& psi);

// d omega = 0 and d psiPlus = 0 on h
bool halfFlatCheck(const LieAlg& h, const SU3Structure& s);

// fixed reference forms on a 6-dim space
FormQ omegaNormal6();     // f12+f34+f56
FormQ psiMinusNormal6();  // -f246+f136+f145+f235
FormQ psiPlusNormal6();   // f135-f146-f236-f245

}  // namespace nilg2
