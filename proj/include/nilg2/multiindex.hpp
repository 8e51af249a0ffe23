#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace nilg2 {

// strictly increasing list of 1-based indices
using Idx = std::vector<int>;

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// lex rank of a k-subset of {1..n}
inline long long idxRank(const Idx& I, int n) {
  long long r = 0;
  int prev = 0;
  int k = (int)I.size();
  for (int p = 0; p < k; ++p) {
    for (int v = prev + 1; v < I[p]; ++v) r += binom(n - v, k - p - 1);
    prev = I[p];
  }
  return r;
}

inline Idx idxUnrank(long long r, int n, int k) {
  Idx I;
  I.reserve(k);
  int v = 1;
  for (int p = 0; p < k; ++p) {
    while (true) {
      long long c = binom(n - v, k - p - 1);
      if (r < c) break;
      r -= c;
      ++v;
    }
    I.push_back(v++);
  }
  return I;
}

// all k-subsets of {1..n} in lex order
inline std::vector<Idx> allSubsets(int n, int k) {
  std::vector<Idx> out;
  long long m = binom(n, k);
  out.reserve(m);
  for (long long r = 0; r < m; ++r) out.push_back(idxUnrank(r, n, k));
  return out;
}

// sign of merging two disjoint increasing lists; 0 if they intersect.
// fills M with the sorted union when nonzero.
inline int mergeSign(const Idx& I, const Idx& J, Idx& M) {
  M.clear();
  M.reserve(I.size() + J.size());
  size_t a = 0, b = 0;
  long long inv = 0;
  while (a < I.size() && b < J.size()) {
    if (I[a] == J[b]) return 0;
    if (I[a] < J[b]) {
      M.push_back(I[a++]);
    } else {
      inv += (long long)(I.size() - a);
      M.push_back(J[b++]);
    }
  }
  while (a < I.size()) M.push_back(I[a++]);
  while (b < J.size()) M.push_back(J[b++]);
  return (inv % 2 == 0) ? 1 : -1;
}

// sign of the permutation (I, complement of I) of {1..n}:
// inversions = pairs (i in I, c not in I) with c < i
inline int splitSign(const Idx& I, int n) {
  std::vector<char> inI(n + 1, 0);
  for (int v : I) inI[v] = 1;
  long long inv = 0;
  for (int i : I)
    for (int c = 1; c < i; ++c)
      if (!inI[c]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

inline Idx idxComplement(const Idx& I, int n) {
  std::vector<char> inI(n + 1, 0);
  for (int v : I) inI[v] = 1;
  Idx C;
  C.reserve(n - I.size());
  for (int v = 1; v <= n; ++v)
    if (!inI[v]) C.push_back(v);
  return C;
}

// position of j in I (0-based), or -1
inline int idxFind(const Idx& I, int j) {
  for (size_t p = 0; p < I.size(); ++p)
    if (I[p] == j) return (int)p;
  return -1;
}

}  // namespace nilg2
