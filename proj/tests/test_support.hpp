#pragma once

#include "isozono/number.hpp"
#include "isozono/pl_graph.hpp"
#include "isozono/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace isozono::testing {

inline RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline RationalVector rq(std::initializer_list<const char*> xs) {
  RationalVector v;
  for (auto x : xs) v.push_back(parse_rational(x));
  return v;
}

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<RationalVector> points(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> out;
  for (auto r : rows) out.push_back(rv(r));
  return out;
}

inline std::vector<RationalVector> box_vertices(std::size_t n, long lo, long hi) {
  std::vector<RationalVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RationalVector v;
    for (std::size_t k = 0; k < n; ++k) v.emplace_back((mask >> k) & 1U ? hi : lo);
    out.push_back(v);
  }
  return out;
}

/// Polygon vertices sorted counter-clockwise around their centroid.
inline std::vector<RationalVector> ccw_order(std::vector<RationalVector> verts) {
  RationalVector c{Rational(0), Rational(0)};
  for (const auto& v : verts) {
    c[0] += v[0];
    c[1] += v[1];
  }
  c[0] /= static_cast<long>(verts.size());
  c[1] /= static_cast<long>(verts.size());
  auto half = [&](const RationalVector& v) {
    const Rational dx = v[0] - c[0], dy = v[1] - c[1];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(verts.begin(), verts.end(), [&](const RationalVector& a, const RationalVector& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    return cross > 0;
  });
  return verts;
}

/// Shoelace area of a convex polygon given by its vertices in any order.
/// Independent of the library's triangulation and face machinery.
inline Rational shoelace_area(std::vector<RationalVector> verts) {
  verts = ccw_order(std::move(verts));
  Rational twice(0);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& p = verts[i];
    const auto& q = verts[(i + 1) % verts.size()];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return abs(twice) / 2;
}

/// Lattice points of a convex polygon by cross-product tests against the
/// counter-clockwise edge cycle: (interior, on boundary).
inline std::pair<long, long> polygon_lattice_points(const std::vector<RationalVector>& vertices) {
  auto cyc = ccw_order(vertices);
  Rational lo_x = cyc[0][0], hi_x = lo_x, lo_y = cyc[0][1], hi_y = lo_y;
  for (const auto& v : cyc) {
    lo_x = std::min(lo_x, v[0]);
    hi_x = std::max(hi_x, v[0]);
    lo_y = std::min(lo_y, v[1]);
    hi_y = std::max(hi_y, v[1]);
  }
  long interior = 0, boundary = 0;
  for (long x = ceil_of(lo_x).get_si(); x <= floor_of(hi_x).get_si(); ++x) {
    for (long y = ceil_of(lo_y).get_si(); y <= floor_of(hi_y).get_si(); ++y) {
      bool inside = true, on_edge = false;
      for (std::size_t i = 0; i < cyc.size() && inside; ++i) {
        const auto& p = cyc[i];
        const auto& q = cyc[(i + 1) % cyc.size()];
        Rational cross = (q[0] - p[0]) * (y - p[1]) - (q[1] - p[1]) * (x - p[0]);
        if (cross < 0) inside = false;
        if (cross == 0) on_edge = true;
      }
      if (inside) (on_edge ? boundary : interior) += 1;
    }
  }
  return {interior, boundary};
}

using P2 = std::pair<Rational, Rational>;

inline Rational cross(const P2& o, const P2& a, const P2& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Andrew's monotone chain; strict turns only, so collinear points are dropped.
inline std::vector<RationalVector> hull2d(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) {
    std::vector<RationalVector> out;
    for (const auto& p : pts) out.push_back({p.first, p.second});
    return out;
  }
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  std::vector<RationalVector> out;
  for (const auto& p : h) out.push_back({p.first, p.second});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<RationalVector> random_integer_points(std::mt19937_64& rng, std::size_t count, std::size_t dim,
                                                         long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < count; ++i) {
    RationalVector p;
    for (std::size_t k = 0; k < dim; ++k) p.emplace_back(dist(rng));
    out.push_back(p);
  }
  return out;
}

inline LatticeSet random_lattice_set(std::mt19937_64& rng, std::size_t dim, std::size_t max_size, long radius) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  std::uniform_int_distribution<long> coord(-radius, radius);
  std::size_t room = 1;
  for (std::size_t k = 0; k < dim && room < max_size; ++k) room *= static_cast<std::size_t>(2 * radius + 1);
  const std::size_t target = std::min(size_dist(rng), room);
  LatticePointSet pts;
  while (pts.size() < target) {
    LatticePoint p(dim);
    for (auto& x : p) x = coord(rng);
    pts.insert(p);
  }
  return LatticeSet(dim, std::vector<LatticePoint>(pts.begin(), pts.end()));
}

}  // namespace isozono::testing

#define EXPECT_ISOZONO_ERROR(statement, expected_kind)                          \
  do {                                                                          \
    try {                                                                       \
      statement;                                                                \
      ADD_FAILURE() << "expected " << ::isozono::to_string(expected_kind);      \
    } catch (const ::isozono::Error& e_) {                                      \
      EXPECT_EQ(e_.kind(), expected_kind) << e_.what();                         \
    }                                                                           \
  } while (0)
