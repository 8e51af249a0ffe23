#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nilg2/reduction.hpp"

namespace nilg2 {

struct SearchConfig {
  uint64_t seed = 1;
  uint64_t trials = 10000;  // >= 1
  int coefficientBox = 5;   // integer coordinate bound N >= 1
  int refinement = 0;       // greedy integer improvement steps per trial
};

// A re-checkable existence witness. phi4 is exact and closed; the leading
// principal minors of the dual-side B matrix certify definiteness. The
// certificate carries everything needed to re-verify without the search.
struct ExistenceCertificate {
  std::string algebra;                 // display name, stamped by the caller
  std::string diffs;                   // structure constants, re-parseable
  std::optional<Rat> mu;               // parameter binding when parametric
  FormQ phi4{7, 4};
  std::vector<Rat> kernelCoordinates;  // coordinates over closedForms(g, 4)
  std::vector<Rat> minorSigns;         // leading principal minors of Btilde
  bool verifiedClosed = false;
  int orientation = 1;                 // +1 when the minors are all positive
};

struct SearchReport {
  uint64_t trialsRun = 0;
  // longest prefix of leading principal minors matching a definite sign
  // pattern over all failed candidates; 7 would mean success
  int bestDefiniteMinors = 0;
};

// Randomized search for a closed stable positive 4-form: integer coordinates
// in [-N, N] over the exact kernel basis of d on 4-forms, evaluated exactly.
// Trial 0 always probes the reference 4-form when it is closed, so algebras
// carrying the normal form succeed immediately. Deterministic given the
// seed: the generator is split per trial index, and the parallel version
// returns the lowest-index success. Failure is a value; *report is filled
// either way.
std::optional<ExistenceCertificate> witnessSearch(const LieAlg& g,
                                                  const SearchConfig& cfg,
                                                  SearchReport* report = nullptr);

// single-threaded reference with identical outcomes
std::optional<ExistenceCertificate> witnessSearchSerial(
    const LieAlg& g, const SearchConfig& cfg, SearchReport* report = nullptr);

// wraps an externally produced closed stable positive 4-form (for example
// the extension of a half-flat structure) into a certificate
std::optional<ExistenceCertificate> certificateFromClosed4Form(const LieAlg& g,
                                                               const FormQ& phi4);

// Recomputes closedness and the definiteness minors from scratch; true iff
// both pass and the minors equal the stored ones up to the global sign flip
// a negated 4-form induces (odd-order minors change sign, the orientation
// flag flips, definiteness is preserved).
bool verifyCertificate(const LieAlg& g, const ExistenceCertificate& cert);

// Search for a pair (omega, psiPlus) of closed stable forms making an
// SU(3)-structure with both distinguished forms closed. Each trial draws a
// closed symplectic omega, solves the linear compatibility omega ^ rho = 0
// inside the closed 3-forms, and alternates exact hill climbs: on rho,
// graded by orbit sign and then the leading minors of the candidate metric,
// and on omega for fixed rho, where the valid set is a convex cone. A valid
// pair is rotated a quarter turn so the closed 3-form lands in the psiPlus
// slot. The reference pair is probed first, so the abelian algebra returns
// it exactly. refinement overrides the climb length per phase (default 200).
std::optional<SU3Structure> halfFlatSearch(const LieAlg& h,
                                           const SearchConfig& cfg,
                                           SearchReport* report = nullptr);

}  // namespace nilg2
