#include "nilg2/rational.hpp"

namespace nilg2 {

std::optional<Rat> ratSqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rat(0);
  Int n = q.get_num(), d = q.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

namespace {
std::optional<Int> intNinthRoot(const Int& n) {
  if (sgn(Rat(n)) == 0) return Int(0);
  Int a = abs(n), r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), 9);
  if (!exact) return std::nullopt;
  if (sgn(Rat(n)) < 0) r = -r;
  return r;
}
}  // namespace

std::optional<Rat> ratNinthRoot(const Rat& q) {
  auto rn = intNinthRoot(q.get_num());
  if (!rn) return std::nullopt;
  auto rd = intNinthRoot(q.get_den());
  if (!rd) return std::nullopt;
  Rat r(*rn, *rd);
  r.canonicalize();
  return r;
}

}  // namespace nilg2
