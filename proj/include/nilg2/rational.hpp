#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace nilg2 {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat ratFromString(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

// "num" or "num/den", canonical sign on the numerator
inline std::string ratToString(const Rat& q) {
  return q.get_str();
}

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

// exact square root if q is a square of a rational, else nullopt
std::optional<Rat> ratSqrt(const Rat& q);

// exact real ninth root if q has one in Q (sign-preserving: odd root), else nullopt
std::optional<Rat> ratNinthRoot(const Rat& q);

// floating approximation
inline double ratToDouble(const Rat& q) { return q.get_d(); }

}  // namespace nilg2
