#pragma once

#include <optional>

#include "nilg2/hodge.hpp"
#include "nilg2/liealg.hpp"

namespace nilg2 {

enum class StableClass7 { PiPlus, PiMinus, NonStable };

// B_{ij} * vol = iota_i phi ^ iota_j phi ^ phi; symmetric, cubic in phi
template <class R>
MatrixT<R> bMatrix(const FormT<R>& phi, const VolumeT<R>& vol) {
  assert(phi.n == 7 && phi.k == 3 && vol.n == 7);
  MatrixT<R> B(7, 7);
  std::vector<FormT<R>> con;
  con.reserve(7);
  for (int i = 1; i <= 7; ++i) con.push_back(contractBasis(i, phi));
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      R v = wedge(wedge(con[i], con[j]), phi).c[0];
      if (vol.sign < 0) v = -v;
      B(i, j) = v;
      B(j, i) = v;
    }
  return B;
}

// definite B <-> positive type; indefinite nondegenerate B <-> split type
StableClass7 classify3Form7(const FormQ& phi, const VolQ& vol);

struct Metric7 {
  MatQ B;
  Rat detB;
  MatD g;                       // B / (2 eps)
  double eps;                   // 3 * ninth root of det(B)/6^7
  std::optional<Rat> epsExact;  // when the ninth root is rational
  std::optional<MatQ> gExact;
};

// metric and volume scalar of a nondegenerate 3-form; empty when det(B) = 0
std::optional<Metric7> metric7(const FormQ& phi, const VolQ& vol);

// a 4-form read as a 3-vector through vol: t_P = sign(P,P^c) * phi4[P^c]
FormQ fourFormAsThreeVector(const FormQ& phi4, const VolQ& vol);

// classification through the dual-side b construction; the orientation picks
// which of the two 3-form preimages the 4-form represents and does not
// affect the verdict
StableClass7 classify4Form7(const FormQ& phi4, const VolQ& vol, int orientation);

enum class G2Status { Valid, NotClosed, NotStablePositive };

struct G2Structure {
  FormQ phi4;
  FormD phi3;                   // *_g phi4, sign fixed by the orientation
  MatQ Btilde;                  // dual-side b matrix, the exact certificate
  Rat detBtilde;
  MatD g;
  double eps;
  std::optional<MatQ> gExact;
  std::optional<Rat> epsExact;
  int orientation = 1;
};

struct G2Result {
  G2Status status = G2Status::NotClosed;
  std::optional<G2Structure> s;
};

// cocalibrated structure from an exactly closed positive 4-form
G2Result g2FromClosed4Form(const LieAlg& g, const FormQ& phi4, int orientation = 1);

// fixed reference forms on a 7-dim space
FormQ g2Phi3Normal();  // f127+f347+f567+f135-f146-f236-f245
FormQ g2Phi4Normal();  // f1234+f1256+f3456-f2467+f1367+f1457+f2357

}  // namespace nilg2
