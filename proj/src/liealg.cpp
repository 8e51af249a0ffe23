#include "nilg2/liealg.hpp"

namespace nilg2 {

std::vector<Rat> bracket(const LieAlg& g, int j, int k) {
  std::vector<Rat> v(g.n, Rat(0));
  Idx jk{std::min(j, k), std::max(j, k)};
  int flip = (j < k) ? 1 : -1;
  if (j == k) return v;
  for (int i = 0; i < g.n; ++i) {
    Rat c = g.df[i].coeff(jk);
    if (c == 0) continue;
    v[i] = (flip > 0) ? -c : c;
  }
  return v;
}

std::vector<std::vector<Rat>> centerBasis(const LieAlg& g) {
  // rows: (form index i, component l); cols: X_j
  int n = g.n;
  MatQ m(n * n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      FormQ cj = contractBasis(j + 1, g.df[i]);
      for (int l = 0; l < n; ++l) m(i * n + l, j) = cj.c[l];
    }
  }
  return kernelBasis(m);
}

bool isCentral(const LieAlg& g, const std::vector<Rat>& X) {
  for (int i = 0; i < g.n; ++i)
    if (!contract(X, g.df[i]).isZero()) return false;
  return true;
}

bool isNilpotent(const LieAlg& g) {
  // lower central series of the span of basis brackets
  int n = g.n;
  std::vector<std::vector<Rat>> cur;
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) cur.push_back(bracket(g, j, k));
  auto spanRank = [n](const std::vector<std::vector<Rat>>& vecs) {
    if (vecs.empty()) return 0;
    MatQ m((int)vecs.size(), n);
    for (size_t i = 0; i < vecs.size(); ++i)
      for (int j = 0; j < n; ++j) m((int)i, j) = vecs[i][j];
    return rank(m);
  };
  int r = spanRank(cur);
  for (int step = 0; step < n + 1; ++step) {
    if (r == 0) return true;
    // next term: brackets of basis elements with current span generators
    std::vector<std::vector<Rat>> next;
    for (const auto& v : cur) {
      for (int j = 1; j <= n; ++j) {
        std::vector<Rat> w(n, Rat(0));
        bool nz = false;
        for (int k = 1; k <= n; ++k) {
          if (v[k - 1] == 0) continue;
          auto b = bracket(g, j, k);
          for (int l = 0; l < n; ++l) {
            w[l] += v[k - 1] * b[l];
          }
        }
        for (int l = 0; l < n; ++l)
          if (w[l] != 0) nz = true;
        if (nz) next.push_back(std::move(w));
      }
    }
    int r2 = spanRank(next);
    if (r2 >= r && r > 0) return false;  // series stalled above zero
    cur = std::move(next);
    r = r2;
  }
  return r == 0;
}

MatQ dMatrix(const LieAlg& g, int k) {
  long long colsN = binom(g.n, k), rowsN = binom(g.n, k + 1);
  MatQ m((int)rowsN, (int)colsN);
  auto subs = allSubsets(g.n, k);
  for (size_t c = 0; c < subs.size(); ++c) {
    FormQ d = ceDifferential(g, basisForm<Rat>(g.n, subs[c]));
    for (size_t r = 0; r < d.c.size(); ++r) m((int)r, (int)c) = d.c[r];
  }
  return m;
}

std::vector<FormQ> closedForms(const LieAlg& g, int k) {
  auto ker = kernelBasis(dMatrix(g, k));
  std::vector<FormQ> out;
  for (auto& v : ker) {
    FormQ f(g.n, k);
    f.c = v;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace nilg2
