#include "nilg2/form.hpp"

#include <sstream>

namespace nilg2 {

Rat formContent(const FormT<Rat>& w) {
  Int num(0), den(1);
  for (const Rat& v : w.c) {
    if (v == 0) continue;
    Int n = abs(v.get_num()), d = v.get_den();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  if (num == 0) return Rat(0);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string formToString(const FormT<Rat>& w, const std::string& letter) {
  std::ostringstream os;
  auto subs = allSubsets(w.n, w.k);
  bool first = true;
  for (size_t i = 0; i < subs.size(); ++i) {
    const Rat& v = w.c[i];
    if (v == 0) continue;
    Rat av = abs(v);
    if (first) {
      if (sgn(v) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(v) < 0 ? " - " : " + ");
    }
    if (av != 1) os << ratToString(av) << "*";
    os << letter;
    for (int d : subs[i]) os << d;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace nilg2
