#pragma once

#include <string>
#include <vector>

#include "nilg2/parser.hpp"

namespace nilg2 {

enum class ExpectedVerdict { Exists, ObstructedCorollary, ObstructedLemma2 };

// One row of the classification census. `diffs` is a strict-parseable
// structure string; `verbatim` preserves the printed cell when it had to be
// repaired (TeX markup, stray commas, missing parens). A nonempty `editorial`
// documents the repair; such rows are reported but excluded from the hard
// discrepancy gate. `unrepaired` marks the single row for which no valid
// completion exists: it is carried for audit and skipped by every sweep.
struct RegistryEntry {
  std::string table;
  std::string name;
  std::string diffs;
  std::string verbatim;
  std::string constraint;
  std::string editorial;
  bool unrepaired = false;
  int x = 0;
  ExpectedVerdict verdict = ExpectedVerdict::Exists;
  ParsedAlgebra algebra;
};

std::vector<RegistryEntry> loadRegistry(const std::string& path);

// the registry shipped with the build, cached after first load
const std::vector<RegistryEntry>& registry();

// all rows with the given name (a name can appear in both an existence table
// and an obstruction table with disjoint parameter ranges)
std::vector<const RegistryEntry*> findEntries(const std::string& name);

// deterministic parameter values satisfying a constraint like "mu!=0,1",
// "mu>1", "mu>=0", "mu=-2", "mu in R"; three values, except "mu=c" pins one
std::vector<Rat> admissibleSamples(const std::string& constraint);

}  // namespace nilg2
