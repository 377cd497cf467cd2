#pragma once
// Small independent computations used as test oracles. Nothing here calls into the
// library beyond reading the Cartan matrix.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ellspin/rootsystem.hpp"

namespace oracle {

using Vec = std::vector<int>;

// <x, alpha_i^vee> from the Cartan matrix alone; cartan(j, i) = <alpha_j, alpha_i^vee>
inline int pair(const ellspin::IntMatrix& A, const Vec& x, int i) {
  int s = 0;
  for (int j = 0; j < A.n; ++j) s += x[j] * A(j, i);
  return s;
}

inline Vec simpleReflect(const ellspin::IntMatrix& A, int i, Vec x) {
  x[i] -= pair(A, x, i);
  return x;
}

/// Roots by breadth-first closure of the simple roots under simple reflections.
inline std::set<Vec> rootsByClosure(const ellspin::IntMatrix& A) {
  std::set<Vec> seen;
  std::vector<Vec> todo;
  for (int i = 0; i < A.n; ++i) {
    Vec e(A.n, 0);
    e[i] = 1;
    todo.push_back(e);
    seen.insert(e);
  }
  while (!todo.empty()) {
    Vec x = todo.back();
    todo.pop_back();
    for (int i = 0; i < A.n; ++i) {
      Vec y = simpleReflect(A, i, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

/// |W| as the orbit size of a regular vector (2 rho in the weight basis is (2,...,2)).
inline std::size_t weylOrderByOrbit(const ellspin::IntMatrix& A) {
  // act on weight coordinates: s_i(lambda) = lambda - lambda_i alpha_i, alpha_i = row i of A
  std::set<Vec> seen;
  std::vector<Vec> todo{Vec(A.n, 1)};
  seen.insert(todo.front());
  while (!todo.empty()) {
    Vec x = todo.back();
    todo.pop_back();
    for (int i = 0; i < A.n; ++i) {
      Vec y = x;
      for (int j = 0; j < A.n; ++j) y[j] -= x[i] * A(i, j);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

/// Nonzero t in GF(2)^n with sum_i t_i A(j, i) even for every j, as bit masks.
inline std::set<std::uint32_t> centerByBruteForce(const ellspin::IntMatrix& A) {
  std::set<std::uint32_t> out;
  for (std::uint32_t t = 1; t < (1u << A.n); ++t) {
    bool ok = true;
    for (int j = 0; j < A.n && ok; ++j) {
      int s = 0;
      for (int i = 0; i < A.n; ++i)
        if (t >> i & 1) s += A(j, i);
      ok = s % 2 == 0;
    }
    if (ok) out.insert(t);
  }
  return out;
}

/// Fraction-free determinant of a small integer matrix.
inline long long det(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  long long sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Dense integer matrices for SL(n) checks.
using Mat = std::vector<std::vector<long long>>;

inline Mat identity(int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// m_i(1) in SL(n): the rotation block [[0, 1], [-1, 0]] on coordinates i, i+1 (1-based i).
inline Mat slM(int n, int i) {
  Mat m = identity(n);
  m[i - 1][i - 1] = 0;
  m[i][i] = 0;
  m[i - 1][i] = 1;
  m[i][i - 1] = -1;
  return m;
}

inline Mat slH(int n, int i) {
  Mat m = identity(n);
  m[i - 1][i - 1] = -1;
  m[i][i] = -1;
  return m;
}

}  // namespace oracle
