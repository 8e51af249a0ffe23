#include "nilg2/obstruction.hpp"

#include <cassert>
#include <random>
#include <sstream>

namespace nilg2 {

namespace {

std::string idxDigits(const Idx& I) {
  std::string s;
  for (int v : I) s += char('0' + v);
  return s;
}

template <class R>
FormT<R> dropLast(const FormT<R>& a) {
  FormT<R> out(a.n - 1, a.k);
  auto subs = allSubsets(a.n, a.k);
  for (size_t i = 0; i < subs.size(); ++i)
    if (subs[i].back() < a.n) out.coeff(subs[i]) = a.c[i];
  return out;
}

// coordinates of target in the span of B, or nothing
std::optional<std::vector<Rat>> solveInSpan(const std::vector<FormQ>& B, const FormQ& target) {
  if (B.empty()) return std::nullopt;
  int rows = (int)target.c.size();
  int m = (int)B.size();
  MatQ A(rows, m + 1);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < m; ++k) A(i, k) = B[k].c[i];
    A(i, m) = target.c[i];
  }
  auto pivots = rref(A);
  std::vector<Rat> t(m, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m) return std::nullopt;
    t[pivots[r]] = A((int)r, m);
  }
  return t;
}

}  // namespace

Closed4 closed4Forms(const LieAlg& g) {
  assert(g.n == 7);
  MatQ M = dMatrix(g, 4);
  MatQ R = M;
  auto pivots = rref(R);
  Closed4 out;
  for (size_t r = 0; r < pivots.size(); ++r) {
    FormQ row(7, 4);
    for (int c = 0; c < 35; ++c) row.c[c] = R((int)r, c);
    out.constraints.push_back(row);
  }
  auto ker = kernelBasis(M);
  auto subs = allSubsets(7, 4);
  std::vector<char> isPivot(35, 0);
  for (int c : pivots) isPivot[c] = 1;
  size_t ki = 0;
  for (int c = 0; c < 35; ++c) {
    if (isPivot[c]) continue;
    FormQ b(7, 4);
    b.c = ker[ki++];
    out.basis.push_back(b);
    out.freeIdx.push_back(subs[c]);
  }
  assert(ki == ker.size());
  return out;
}

std::string constraintString(const FormQ& row) {
  auto subs = allSubsets(row.n, row.k);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < subs.size(); ++i) {
    const Rat& v = row.c[i];
    if (v == 0) continue;
    Rat a = v;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "phi_" << idxDigits(subs[i]);
    first = false;
  }
  os << " = 0";
  return os.str();
}

Z3Space z3Space(const LieAlg& g, const std::vector<Rat>& X) {
  assert(g.n == 7 && isCentral(g, X));
  Closed4 c4 = closed4Forms(g);
  Z3Space z;
  z.quotient = quotientByCentral(g, X);

  // elimination accumulator over the 20 quotient coordinates
  std::vector<std::pair<int, std::vector<Rat>>> rows;
  for (size_t k = 0; k < c4.basis.size(); ++k) {
    FormQ iX = contract(X, c4.basis[k]).scaled(Rat(-1));
    assert(z.quotient.isBasic(iX));
    FormQ w = z.quotient.push(iX);
    std::vector<Rat> v = w.c;
    for (auto& [p, row] : rows) {
      if (v[p] == 0) continue;
      Rat f = v[p];
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
    int piv = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        piv = (int)j;
        break;
      }
    if (piv < 0) continue;
    Rat f = v[piv];
    for (auto& x : v) x /= f;
    rows.emplace_back(piv, v);
    z.basis.push_back(w);
    z.names.push_back("phi_" + idxDigits(c4.freeIdx[k]));
  }
  return z;
}

LambdaPolynomial lambdaPolynomial(const Z3Space& z) {
  int m = (int)z.basis.size();
  LambdaPolynomial L;
  L.parameters = z.names;
  L.volRef = VolQ{6, 1};
  FormT<Poly> psi(6, 3);
  for (int k = 0; k < m; ++k) {
    Poly tk = Poly::variable(k, m);
    for (size_t i = 0; i < psi.c.size(); ++i) {
      if (z.basis[k].c[i] == 0) continue;
      psi.c[i] += tk.scaledQ(z.basis[k].c[i]);
    }
  }
  MatrixT<Poly> K = kMatrix(psi, VolumeT<Poly>{6, 1});
  Poly tr;
  tr.nvars = m;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) tr += K(i, j) * K(j, i);
  L.poly = tr.scaledQ(Rat(1, 6));
  return L;
}

CorollaryResult corollaryObstruction(const LieAlg& g, const std::vector<Rat>& X,
                                     const CorollaryConfig& cfg) {
  assert(g.n == 7 && isCentral(g, X));
  CorollaryResult out;
  out.z3 = z3Space(g, X);
  const auto& B = out.z3.basis;
  int m = (int)B.size();

  auto tryPoint = [&](const std::vector<Rat>& t) -> bool {
    FormQ psi(6, 3);
    for (int k = 0; k < m; ++k)
      if (t[k] != 0) psi = psi + B[k].scaled(t[k]);
    Rat v = lambda(psi);
    if (v < 0) {
      out.verdict = ObstructionVerdict::NotObstructed;
      out.negative = NegativeWitnessCert{t, v};
      out.witness = psi;
      return true;
    }
    return false;
  };

  std::mt19937_64 rng(cfg.seed);
  auto randomPoint = [&]() {
    std::vector<Rat> t(m);
    std::uniform_int_distribution<int> dd(1, 3);
    for (int k = 0; k < m; ++k) {
      int den = dd(rng);
      int num = std::uniform_int_distribution<int>(-10 * den, 10 * den)(rng);
      t[k] = Rat(num, den);
      t[k].canonicalize();
    }
    return t;
  };

  // cheap exact refutations first: the model negative form when it lies in
  // the span, then a short direct sweep
  int used = 0;
  if (m > 0) {
    if (auto t = solveInSpan(B, psiMinusNormal6()))
      if (tryPoint(*t)) return out;
    for (; used < 300 && used < cfg.samples; ++used)
      if (tryPoint(randomPoint())) return out;
  }

  out.lambda = lambdaPolynomial(out.z3);
  assert(out.lambda->poly.isZero() || out.lambda->poly.totalDegree() == 4);
  if (auto d = polySquareRoot(out.lambda->poly)) {
    out.verdict = ObstructionVerdict::Obstructed;
    out.square = PerfectSquareCert{d->factor, d->root};
    return out;
  }

  // long randomized hunt, float prefilter with exact confirmation
  std::vector<double> td(m);
  for (; used < cfg.samples; ++used) {
    auto t = randomPoint();
    for (int k = 0; k < m; ++k) td[k] = t[k].get_d();
    if (out.lambda->poly.evalD(td) >= 1e-9) continue;
    Rat v = out.lambda->poly.eval(t);
    if (v < 0) {
      FormQ psi(6, 3);
      for (int k = 0; k < m; ++k)
        if (t[k] != 0) psi = psi + B[k].scaled(t[k]);
      out.verdict = ObstructionVerdict::NotObstructed;
      out.negative = NegativeWitnessCert{t, v};
      out.witness = psi;
      return out;
    }
  }
  out.verdict = ObstructionVerdict::Inconclusive;
  return out;
}

Lemma2Result lemma2Obstruction(const LieAlg& g, const std::vector<Rat>& X,
                               const std::vector<int>& W) {
  assert(g.n == 7 && isCentral(g, X));
  Closed4 c4 = closed4Forms(g);
  int m = (int)c4.basis.size();
  int nv = m + 6;
  QuotientQ q = quotientByCentral(g, X);

  // symbolic closed 4-form in the adapted coframe
  FormT<Poly> A(7, 4);
  for (auto& cv : A.c) cv.nvars = nv;
  for (int k = 0; k < m; ++k) {
    FormQ ad = q.adapted(c4.basis[k]);
    Poly tk = Poly::variable(k, nv);
    for (size_t i = 0; i < A.c.size(); ++i) {
      if (ad.c[i] == 0) continue;
      A.c[i] += tk.scaledQ(ad.c[i]);
    }
  }
  FormT<Poly> i7A = contractBasis(7, A);
  FormT<Poly> psi = dropLast(i7A).scaled(Poly(-1));

  MatrixT<Poly> K = kMatrix(psi, VolumeT<Poly>{6, 1});
  std::vector<std::string> pat(6, std::string(6, '*'));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (K(i, j).isZero()) pat[i][j] = '0';

  std::vector<char> inW(7, 0);
  for (int w : W) inW[w] = 1;
  for (int r = 1; r <= 6; ++r) {
    if (inW[r]) continue;
    for (int c : W)
      if (pat[r - 1][c - 1] != '0') return {};
  }

  // sigma with the connection form carried symbolically, eta(X) = 1
  FormT<Poly> eta(7, 1);
  for (int i = 1; i <= 6; ++i) eta.coeff({i}) = Poly::variable(m + i - 1, nv);
  eta.coeff({7}) = Poly(1);
  FormT<Poly> sigma7 = A + wedge(i7A, eta);
  auto subs = allSubsets(7, 4);
  for (size_t i = 0; i < subs.size(); ++i)
    if (subs[i].back() == 7) assert(sigma7.c[i].isZero());
  FormT<Poly> sigma = dropLast(sigma7);

  Idx WI(W.begin(), W.end());
  std::sort(WI.begin(), WI.end());
  if (!sigma.coeff(WI).isZero()) return {};

  Lemma2Result out;
  out.verdict = ObstructionVerdict::Obstructed;
  Lemma2Cert cert;
  cert.W = W;
  for (auto& row : c4.constraints) cert.closednessConstraints.push_back(constraintString(row));
  cert.invariancePattern = pat;
  cert.forcedZeroComponent = "sigma_" + idxDigits(WI);
  out.cert = cert;
  return out;
}

}  // namespace nilg2
