#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilg2/rational.hpp"

namespace nilg2 {

// sparse multivariate polynomial over Q; monomial = exponent vector
struct Poly {
  using Mono = std::vector<uint16_t>;
  int nvars = 0;
  std::map<Mono, Rat> t;  // lex-ordered by std::map on exponent vectors

  Poly() = default;
  explicit Poly(int v) : nvars(0) { setConst(Rat(v)); }
  Poly(const Rat& q, int nv) : nvars(nv) { setConst(q); }

  void setConst(const Rat& q) {
    t.clear();
    if (q != 0) t[Mono(nvars, 0)] = q;
  }

  static Poly constant(const Rat& q, int nv) { return Poly(q, nv); }
  static Poly variable(int i, int nv) {
    Poly p;
    p.nvars = nv;
    Mono m(nv, 0);
    m[i] = 1;
    p.t[m] = Rat(1);
    return p;
  }

  bool isZero() const { return t.empty(); }
  bool isConstant() const {
    if (t.empty()) return true;
    return t.size() == 1 && t.begin()->first == Mono(nvars, 0);
  }
  Rat constValue() const {
    if (t.empty()) return Rat(0);
    return t.begin()->second;
  }

  int totalDegree() const {
    int d = 0;
    for (auto& [m, q] : t) {
      int s = 0;
      for (auto e : m) s += e;
      if (s > d) d = s;
    }
    return d;
  }

  void trim() {
    for (auto it = t.begin(); it != t.end();)
      it = (it->second == 0) ? t.erase(it) : std::next(it);
  }

  Poly operator+(const Poly& o) const {
    Poly r = alignWith(o);
    Poly q = o.alignWith(*this);
    for (auto& [m, v] : q.t) r.t[m] += v;
    r.trim();
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, v] : r.t) v = -v;
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly a = alignWith(o), b = o.alignWith(*this);
    Poly r;
    r.nvars = a.nvars;
    for (auto& [ma, va] : a.t)
      for (auto& [mb, vb] : b.t) {
        Mono m(a.nvars);
        for (int i = 0; i < a.nvars; ++i) m[i] = ma[i] + mb[i];
        r.t[m] += va * vb;
      }
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  // division only by nonzero constants
  Poly operator/(const Poly& o) const {
    Poly r = *this;
    Rat d = o.constValue();
    for (auto& [m, v] : r.t) v /= d;
    return r;
  }
  Poly& operator/=(const Poly& o) { return *this = *this / o; }

  bool operator==(const Poly& o) const {
    Poly a = *this, b = o;
    a.trim();
    b.trim();
    if (a.nvars == b.nvars) return a.t == b.t;
    return a.alignWith(b).t == b.alignWith(a).t;
  }

  Poly scaledQ(const Rat& q) const {
    Poly r = *this;
    if (q == 0) {
      r.t.clear();
      return r;
    }
    for (auto& [m, v] : r.t) v *= q;
    return r;
  }

  Rat eval(const std::vector<Rat>& x) const;
  double evalD(const std::vector<double>& x) const;
  std::string toString(const std::vector<std::string>& names) const;

 private:
  // widen to max(nvars, o.nvars) by zero-padding exponents
  Poly alignWith(const Poly& o) const {
    if (nvars >= o.nvars) return *this;
    Poly r;
    r.nvars = o.nvars;
    for (auto& [m, v] : t) {
      Mono mm = m;
      mm.resize(o.nvars, 0);
      r.t[mm] = v;
    }
    return r;
  }
};

// p == factor * root^2 with factor > 0; root normalized monic in lex order
struct SquareDecomp {
  Rat factor;
  Poly root;
};
std::optional<SquareDecomp> polySquareRoot(const Poly& p);

}  // namespace nilg2
