#include "nilg2/poly.hpp"

#include <cmath>
#include <sstream>

namespace nilg2 {

Rat Poly::eval(const std::vector<Rat>& x) const {
  Rat total(0);
  for (auto& [m, v] : t) {
    Rat term = v;
    for (int i = 0; i < nvars; ++i)
      for (int e = 0; e < m[i]; ++e) term *= x[i];
    total += term;
  }
  return total;
}

double Poly::evalD(const std::vector<double>& x) const {
  double total = 0;
  for (auto& [m, v] : t) {
    double term = ratToDouble(v);
    for (int i = 0; i < nvars; ++i)
      if (m[i]) term *= std::pow(x[i], m[i]);
    total += term;
  }
  return total;
}

std::string Poly::toString(const std::vector<std::string>& names) const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print in descending lex order
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto& [m, v] = *it;
    Rat av = abs(v);
    if (first) {
      if (sgn(v) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(v) < 0 ? " - " : " + ");
    }
    bool isConst = true;
    for (auto e : m)
      if (e) isConst = false;
    if (av != 1 || isConst) os << ratToString(av);
    bool needStar = (av != 1);
    for (int i = 0; i < nvars; ++i) {
      if (!m[i]) continue;
      if (needStar) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << (int)m[i];
      needStar = true;
    }
  }
  return os.str();
}

std::optional<SquareDecomp> polySquareRoot(const Poly& p) {
  if (p.isZero()) {
    Poly z;
    z.nvars = p.nvars;
    return SquareDecomp{Rat(1), z};
  }
  // leading term under lex (map is ascending; take the last entry)
  auto lead = std::prev(p.t.end());
  Poly::Mono alpha = lead->first;
  Rat a = lead->second;
  if (!(a > 0)) return std::nullopt;
  for (auto e : alpha)
    if (e % 2) return std::nullopt;

  Poly q = p.scaledQ(Rat(1) / a);
  Poly::Mono beta = alpha;
  for (auto& e : beta) e /= 2;
  Poly r;
  r.nvars = p.nvars;
  r.t[beta] = Rat(1);
  Poly::Mono last = beta;

  int guard = 8 * (int)p.t.size() + 64;
  while (guard-- > 0) {
    Poly e = q - r * r;
    if (e.isZero()) {
      SquareDecomp d{a, r};
      return d;
    }
    auto le = std::prev(e.t.end());
    Poly::Mono gamma = le->first;
    Poly::Mono tm(p.nvars, 0);
    for (int i = 0; i < p.nvars; ++i) {
      if (gamma[i] < beta[i]) return std::nullopt;
      tm[i] = gamma[i] - beta[i];
    }
    // terms of the root come out in strictly decreasing lex order
    if (!(tm < last)) return std::nullopt;
    r.t[tm] = le->second / 2;
    last = tm;
  }
  return std::nullopt;
}

}  // namespace nilg2
