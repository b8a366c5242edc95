#pragma once

#include "isozono/number.hpp"

#include <optional>
#include <utility>
#include <vector>

// Small dense exact linear algebra over Q (and Z where noted). Matrices are
// row lists; every routine is O(rows * cols * rank) Gaussian elimination,
// which is all the n <= 4 geometry here ever needs.

namespace isozono::linalg {

using Matrix = std::vector<RationalVector>;
using IntMatrix = std::vector<IntVector>;

inline Matrix to_rational(const IntMatrix& m) {
  Matrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(isozono::to_rational(std::span<const Integer>(row)));
  return out;
}

struct Echelon {
  Matrix rows;                       // reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
};

inline Echelon reduce(Matrix a, std::size_t ncols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    const std::size_t width = a[r].size();  // row ops also carry augmented columns
    for (std::size_t j = c; j < width; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < width; ++j) a[i][j] -= f * a[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

inline std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  return reduce(a, a.front().size()).pivots.size();
}

inline std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

/// Basis of {x : a x = 0}.
inline Matrix nullspace(const Matrix& a, std::size_t ncols) {
  Echelon e = reduce(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(ncols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Indices of a maximal linearly independent subset of rows, chosen greedily in order.
inline std::vector<std::size_t> independent_rows(const Matrix& a) {
  std::vector<std::size_t> chosen;
  if (a.empty()) return chosen;
  const std::size_t ncols = a.front().size();
  Matrix basis;  // kept in echelon form incrementally
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RationalVector v = a[i];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (v[pivots[b]] == 0) continue;
      Rational f = v[pivots[b]] / basis[b][pivots[b]];
      for (std::size_t j = 0; j < ncols; ++j) v[j] -= f * basis[b][j];
    }
    auto lead = leading_index(v);
    if (lead == ncols) continue;
    basis.push_back(std::move(v));
    pivots.push_back(lead);
    chosen.push_back(i);
    if (chosen.size() == ncols) break;
  }
  return chosen;
}

inline Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Integer determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return Integer(1);
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Integer(0);
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Solution of a x = b for square invertible a, or nullopt if singular.
inline std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b) {
  const std::size_t n = a.size();
  Matrix aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  Echelon e = reduce(std::move(aug), n);
  if (e.pivots.size() != n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.rows[i][n];
  return x;
}

inline Matrix gram(const Matrix& rows) {
  Matrix g(rows.size(), RationalVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      g[i][j] = g[j][i] = dot(rows[i], rows[j]);
    }
  }
  return g;
}

/// Dimension of the affine hull of a point list (-1 for no points).
inline int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return static_cast<int>(rank(diffs));
}

/// Lattice basis of {x in Z^n : a x = 0} by unimodular column operations
/// (column-style Hermite reduction). The returned vectors are the columns of
/// the accumulated unimodular transform that the reduction zeroes out.
inline IntMatrix integer_kernel(IntMatrix a, std::size_t ncols) {
  IntMatrix u(ncols, IntVector(ncols, Integer(0)));  // u[j] is column j
  for (std::size_t j = 0; j < ncols; ++j) u[j][j] = 1;

  auto combine = [](IntVector& x, IntVector& y, const Integer& s, const Integer& t,
                    const Integer& p, const Integer& q) {
    // (x, y) <- (s x + t y, p x + q y)
    for (std::size_t k = 0; k < x.size(); ++k) {
      Integer nx = s * x[k] + t * y[k];
      Integer ny = p * x[k] + q * y[k];
      x[k] = std::move(nx);
      y[k] = std::move(ny);
    }
  };

  // Work on columns of a: transpose for convenient column access.
  IntMatrix cols(ncols, IntVector(a.size(), Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_same_dim(a[i].size(), ncols, "integer_kernel");
    for (std::size_t j = 0; j < ncols; ++j) cols[j][i] = a[i][j];
  }

  std::size_t pivot = 0;
  for (std::size_t i = 0; i < a.size() && pivot < ncols; ++i) {
    for (std::size_t j = pivot + 1; j < ncols; ++j) {
      if (cols[j][i] == 0) continue;
      const Integer x = cols[pivot][i];
      const Integer y = cols[j][i];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      const Integer p = -y / g;
      const Integer q = x / g;
      combine(cols[pivot], cols[j], s, t, p, q);
      combine(u[pivot], u[j], s, t, p, q);
    }
    if (cols[pivot][i] != 0) ++pivot;
  }

  IntMatrix kernel;
  for (std::size_t j = pivot; j < ncols; ++j) kernel.push_back(u[j]);
  return kernel;
}

}  // namespace isozono::linalg
