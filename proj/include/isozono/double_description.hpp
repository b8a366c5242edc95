#pragma once

#include "isozono/linalg.hpp"
#include "isozono/number.hpp"

#include <bit>
#include <cstdint>
#include <vector>

// Double description method for the extreme rays of a pointed polyhedral cone
// {y : <row, y> >= 0 for every row}. Rows are integer; rays are returned as
// primitive integer vectors. Adjacency uses the combinatorial test, so
// degenerate inputs (many rows tight at one ray) are handled exactly.

namespace isozono::dd {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  static Bitset intersect(const Bitset& a, const Bitset& b) {
    Bitset out;
    out.words_.resize(a.words_.size());
    for (std::size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
    return out;
  }

  static std::size_t intersect_count(const Bitset& a, const Bitset& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    }
    return c;
  }

  bool contains(const Bitset& sub) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((sub.words_[i] & ~words_[i]) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector coords;
  Bitset zeros;  // rows tight at this ray
};

/// Extreme rays of {y : M y >= 0}. Requires rank(M) == number of columns
/// (pointed cone); throws Unbounded otherwise. Returns an empty list when the
/// cone is {0}.
inline std::vector<IntVector> extreme_rays(const linalg::IntMatrix& rows) {
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "double description: no constraints");
  const std::size_t d = rows.front().size();
  const std::size_t m = rows.size();
  for (const auto& r : rows) require_same_dim(r.size(), d, "double description");

  const linalg::Matrix qrows = linalg::to_rational(rows);
  auto basis_rows = linalg::independent_rows(qrows);
  if (basis_rows.size() != d) throw Error(ErrorKind::Unbounded, "double description: cone is not pointed");

  // Initial simplicial cone: columns of the inverse of the basis rows.
  linalg::Matrix b;
  for (auto i : basis_rows) b.push_back(qrows[i]);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    RationalVector e(d, Rational(0));
    e[j] = 1;
    auto col = linalg::solve(b, e);
    Ray r{primitive_multiple(*col), Bitset(m)};
    for (std::size_t k = 0; k < d; ++k) {
      if (k != j) r.zeros.set(basis_rows[k]);
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> done(m, false);
  for (auto i : basis_rows) done[i] = true;

  for (std::size_t row = 0; row < m; ++row) {
    if (done[row]) continue;
    done[row] = true;
    const IntVector& a = rows[row];

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].coords);
      if (value[i] > 0) {
        pos.push_back(i);
      } else if (value[i] < 0) {
        neg.push_back(i);
      } else {
        rays[i].zeros.set(row);
      }
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] >= 0) next.push_back(rays[i]);
    }

    for (auto p : pos) {
      for (auto q : neg) {
        // Adjacent iff the common zero set has size >= d-2 and no third ray's
        // zero set contains it.
        if (Bitset::intersect_count(rays[p].zeros, rays[q].zeros) + 2 < d) continue;
        Bitset common = Bitset::intersect(rays[p].zeros, rays[q].zeros);
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (rays[t].zeros.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector y(d);
        const Integer vp = value[p];
        const Integer vq = -value[q];
        for (std::size_t k = 0; k < d; ++k) y[k] = vp * rays[q].coords[k] + vq * rays[p].coords[k];
        common.set(row);
        next.push_back(Ray{make_primitive(std::move(y)), std::move(common)});
      }
    }
    rays = std::move(next);
    if (rays.empty()) break;
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.coords));
  return out;
}

}  // namespace isozono::dd
