#pragma once

// Test-side reference computations. They only use the public accessors of
// FinCategory and DeltaCategory and recompute everything by brute force.

#include <gmpxx.h>

#include <numeric>
#include <vector>

#include "sdcat/fincat.hpp"
#include "sdcat/homology.hpp"
#include "sdcat/nerve.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<mpz_class>>;

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// Number of q-simplices of N C (degenerate ones included when `with_identities`).
/// A q-simplex is a walk of length q in the hom-count graph.
inline mpz_class chain_count(const sdcat::FinCategory& c, int q, bool with_identities) {
  const std::size_t n = c.object_count();
  Matrix step(n, std::vector<mpz_class>(n, 0));
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (!with_identities && c.is_identity(f)) continue;
    step[c.src(f)][c.dst(f)] += 1;
  }
  Matrix power(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (int k = 0; k < q; ++k) power = multiply(power, step);
  mpz_class total = 0;
  for (const auto& row : power)
    for (const auto& v : row) total += v;
  return total;
}

/// Order maps [q_x] → [q_y] realising x as a restriction of y, counted by
/// walking the arrows of y directly.
inline int hom_delta_count(const sdcat::FinCategory& c, const sdcat::Simplex& x, const sdcat::Simplex& y) {
  const int qx = x.dim();
  const int qy = y.dim();
  int count = 0;
  std::vector<int> xi(qx + 1, 0);
  auto between = [&](int from, int to) {
    int arrow = c.identity(y.vertices[from]);
    for (int k = from; k < to; ++k) arrow = c.compose(y.arrows[k], arrow);
    return arrow;
  };
  auto check = [&] {
    for (int i = 0; i <= qx; ++i) {
      if (y.vertices[xi[i]] != x.vertices[i]) return false;
    }
    for (int i = 0; i < qx; ++i) {
      if (between(xi[i], xi[i + 1]) != x.arrows[i]) return false;
    }
    return true;
  };
  // odometer over monotone sequences
  while (true) {
    if (check()) ++count;
    int i = qx;
    while (i >= 0 && xi[i] == qy) --i;
    if (i < 0) break;
    ++xi[i];
    for (int k = i + 1; k <= qx; ++k) xi[k] = xi[i];
  }
  return count;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

/// Congruence by naive fixpoint: seed d_i ~ d_{i+1} into each X s_i, then
/// close under composition with every arrow on either side.
inline std::vector<int> naive_congruence(const sdcat::DeltaCategory& d) {
  const sdcat::FinCategory& c = d.base();
  UnionFind uf(d.arrow_count());
  for (int x = 0; x < d.object_count(); ++x) {
    const int q = d.dim(x);
    if (q + 1 > d.cap()) continue;
    for (int i = 0; i <= q; ++i) {
      const auto y = d.find(sdcat::degenerate(c, d.simplex(x), i));
      std::vector<int> cofaces;
      for (int a : d.hom(x, *y)) {
        const auto& m = d.order_map(a);
        if (m == sdcat::OrderMap::coface(q + 1, i) || m == sdcat::OrderMap::coface(q + 1, i + 1)) {
          cofaces.push_back(a);
        }
      }
      if (cofaces.size() == 2) uf.merge(cofaces[0], cofaces[1]);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < d.arrow_count(); ++a) {
      const int r = uf.find(a);
      if (r == a) continue;
      for (int g : d.out_arrows(d.target(a))) changed |= uf.merge(d.compose(g, a), d.compose(g, r));
      for (int h = 0; h < d.arrow_count(); ++h) {
        if (d.target(h) == d.source(a)) changed |= uf.merge(d.compose(a, h), d.compose(r, h));
      }
    }
  }
  std::vector<int> out(d.arrow_count());
  for (int a = 0; a < d.arrow_count(); ++a) out[a] = uf.find(a);
  return out;
}

/// Determinant by fraction-free elimination.
inline mpz_class determinant(const sdcat::IntMatrix& m) {
  const int n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  mpz_class sign = 1, previous = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Rank over Q.
inline int rank(const sdcat::IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = r;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[r]);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      const mpq_class factor = a[i][col] / a[r][col];
      for (int j = col; j < m.cols(); ++j) a[i][j] -= factor * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Alternating sum of the ranks of a chain complex's groups.
inline long euler_characteristic(const std::vector<std::size_t>& sizes) {
  long chi = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(sizes[k]);
  return chi;
}

}  // namespace oracle
