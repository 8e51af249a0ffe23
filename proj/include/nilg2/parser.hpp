#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilg2/liealg.hpp"
#include "nilg2/poly.hpp"

namespace nilg2 {

// Strict accepts only the canonical grammar; Tolerant first normalizes the
// table notation (TeX parameter names, \frac, stray outer parens, bracketed
// groups) and records any structural repair it makes
enum class ParseMode { Strict, Tolerant };

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t at)
      : std::runtime_error(msg + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};

// structure constants with coefficients polynomial in one parameter mu
struct ParsedAlgebra {
  int n = 0;
  std::vector<FormT<Poly>> df;
  bool symbolic = false;                 // true iff some coefficient mentions mu
  std::vector<std::string> corrections;  // tolerant-mode repair notes

  LieAlgT<Poly> algP() const {
    LieAlgT<Poly> g;
    g.n = n;
    g.df = df;
    return g;
  }
};

// "(s1,...,sn)" with slot = 0 | sum of [coeff] ij terms; n in {6,7}
ParsedAlgebra parseAlgebra(const std::string& text, ParseMode mode = ParseMode::Strict);

// substitute a value for mu
LieAlg instantiate(const ParsedAlgebra& pa, const Rat& mu = Rat(0));

// parse straight to numeric structure constants; throws if the text is
// parametrized and no binding is supplied
LieAlg parseStructure(const std::string& text, std::optional<Rat> mu = {},
                      ParseMode mode = ParseMode::Strict);

// canonical rendering; parseAlgebra(prettyPrint(a)) recovers a exactly
std::string prettyPrint(const ParsedAlgebra& pa);
std::string prettyPrint(const LieAlg& g);

}  // namespace nilg2
