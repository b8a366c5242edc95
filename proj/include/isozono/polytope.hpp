#pragma once

#include "isozono/double_description.hpp"
#include "isozono/linalg.hpp"
#include "isozono/number.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace isozono {

/// Half-space <normal, x> <= offset. The normal is a primitive integer vector
/// pointing outward. Also used for affine-hull equations <normal, x> = offset,
/// where the normal is additionally sign-canonical.
struct Facet {
  IntVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return LexLess<Integer>{}(a.normal, b.normal);
    return a.offset < b.offset;
  }
};

/// Builds the canonical half-space a x <= c from a rational normal/offset pair
/// (a nonzero). Scaling is positive so the side is preserved.
inline Facet make_facet(const RationalVector& a, const Rational& c) {
  Integer l(1);
  for (const auto& x : a) l = lcm(l, x.get_den());
  IntVector n(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) n[i] = a[i].get_num() * (l / a[i].get_den());
  Integer g = content(n);
  for (auto& x : n) x /= g;
  return Facet{std::move(n), c * l / g};
}

inline Facet make_facet(const IntVector& a, const Rational& c) {
  Integer g = content(a);
  IntVector n = a;
  for (auto& x : n) x /= g;
  return Facet{std::move(n), c / g};
}

/// Exact rational convex polytope. Either representation may be absent until
/// computed; lower-dimensional polytopes carry their affine hull as equations.
class Polytope {
 public:
  Polytope() = default;

  Polytope(std::size_t dim, std::size_t affine_dim, std::optional<std::vector<RationalVector>> vertices,
           std::optional<std::vector<Facet>> facets, std::vector<Facet> equalities = {})
      : dim_(dim),
        affine_dim_(affine_dim),
        vertices_(std::move(vertices)),
        facets_(std::move(facets)),
        equalities_(std::move(equalities)) {
    if (vertices_) {
      for (const auto& v : *vertices_) require_same_dim(v.size(), dim_, "Polytope vertex");
      sort_unique(*vertices_);
    }
    if (facets_) {
      for (const auto& f : *facets_) require_same_dim(f.normal.size(), dim_, "Polytope facet");
      std::sort(facets_->begin(), facets_->end());
    }
    std::sort(equalities_.begin(), equalities_.end());
  }

  std::size_t dim() const { return dim_; }
  std::size_t affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_; }

  bool has_vertices() const { return vertices_.has_value(); }
  bool has_facets() const { return facets_.has_value(); }

  const std::vector<RationalVector>& vertices() const {
    if (!vertices_) throw Error(ErrorKind::InvalidArgument, "polytope has no V-representation");
    return *vertices_;
  }
  const std::vector<Facet>& facets() const {
    if (!facets_) throw Error(ErrorKind::InvalidArgument, "polytope has no H-representation");
    return *facets_;
  }
  const std::vector<Facet>& equalities() const { return equalities_; }

  /// Membership against the H-representation (and affine hull equations).
  bool contains(const RationalVector& x) const {
    require_same_dim(x.size(), dim_, "Polytope::contains");
    for (const auto& e : equalities_) {
      if (dot(e.normal, x) != e.offset) return false;
    }
    for (const auto& f : facets()) {
      if (dot(f.normal, x) > f.offset) return false;
    }
    return true;
  }

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::optional<std::vector<RationalVector>> vertices_;
  std::optional<std::vector<Facet>> facets_;
  std::vector<Facet> equalities_;
};

namespace detail {

inline linalg::IntMatrix hull_rows(const std::vector<RationalVector>& points) {
  // Unknown (a, c); each point p contributes c - <a, p> >= 0.
  linalg::IntMatrix rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    Integer l(1);
    for (const auto& x : p) l = lcm(l, x.get_den());
    IntVector row(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) row[i] = -(p[i].get_num() * (l / p[i].get_den()));
    row[p.size()] = l;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<std::size_t> pivot_columns(const std::vector<RationalVector>& points) {
  linalg::Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  if (diffs.empty()) return {};
  return linalg::reduce(diffs, points[0].size()).pivots;
}

inline RationalVector select(const RationalVector& p, const std::vector<std::size_t>& coords) {
  RationalVector out;
  out.reserve(coords.size());
  for (auto c : coords) out.push_back(p[c]);
  return out;
}

inline std::vector<Facet> affine_equations(const std::vector<RationalVector>& points) {
  const std::size_t n = points.front().size();
  linalg::Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  linalg::Matrix normals = diffs.empty() ? linalg::Matrix{} : linalg::nullspace(diffs, n);
  if (diffs.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector e(n, Rational(0));
      e[i] = 1;
      normals.push_back(std::move(e));
    }
  }
  std::vector<Facet> eqs;
  for (const auto& a : normals) {
    IntVector normal = sign_canonical(primitive_multiple(a));
    Rational offset = dot(normal, points.front());
    eqs.push_back(Facet{std::move(normal), std::move(offset)});
  }
  return eqs;
}

}  // namespace detail

/// Facets of the hull of full-dimensional points, and the extreme points among them.
inline std::pair<std::vector<Facet>, std::vector<RationalVector>> full_dimensional_hull(
    const std::vector<RationalVector>& points) {
  const std::size_t n = points.front().size();
  auto rays = dd::extreme_rays(detail::hull_rows(points));
  std::vector<Facet> facets;
  for (const auto& r : rays) {
    IntVector a(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero(a)) continue;
    facets.push_back(make_facet(a, Rational(r[n])));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  std::vector<RationalVector> verts;
  for (const auto& p : points) {
    linalg::IntMatrix tight;
    for (const auto& f : facets) {
      if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    }
    if (tight.size() >= n && linalg::rank(tight) == n) verts.push_back(p);
  }
  return {std::move(facets), std::move(verts)};
}

/// Convex hull of a finite point set: irredundant V-rep always, H-rep for
/// full-dimensional input, affine-hull equations otherwise.
inline Polytope convex_hull(std::vector<RationalVector> points) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "convex_hull: no points");
  const std::size_t n = points.front().size();
  for (const auto& p : points) require_same_dim(p.size(), n, "convex_hull");
  sort_unique(points);
  if (n == 0) return Polytope(0, 0, std::move(points), std::vector<Facet>{});

  const int d = linalg::affine_dimension(points);
  if (static_cast<std::size_t>(d) == n) {
    auto [facets, verts] = full_dimensional_hull(points);
    return Polytope(n, n, std::move(verts), std::move(facets));
  }

  auto eqs = detail::affine_equations(points);
  if (d == 0) return Polytope(n, 0, std::vector<RationalVector>{points.front()}, std::nullopt, std::move(eqs));

  // A coordinate projection onto pivot columns is injective on the affine hull.
  auto coords = detail::pivot_columns(points);
  std::vector<RationalVector> chart;
  chart.reserve(points.size());
  for (const auto& p : points) chart.push_back(detail::select(p, coords));
  auto [chart_facets, chart_verts] = full_dimensional_hull(chart);
  std::vector<RationalVector> verts;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::binary_search(chart_verts.begin(), chart_verts.end(), chart[i], LexLess<Rational>{})) {
      verts.push_back(points[i]);
    }
  }
  return Polytope(n, static_cast<std::size_t>(d), std::move(verts), std::nullopt, std::move(eqs));
}

/// Vertices of {x : facets, equalities}; throws Unbounded for unbounded input.
/// Returns an empty list for an empty polyhedron.
inline std::vector<RationalVector> vertices_from_hrep(std::size_t dim, const std::vector<Facet>& facets,
                                                       const std::vector<Facet>& equalities = {}) {
  // Homogenize: (x, t) with t*offset - <a, x> >= 0 and t >= 0.
  linalg::IntMatrix rows;
  auto push = [&](const IntVector& a, const Rational& c, int sign) {
    IntVector row(dim + 1);
    const Integer& den = c.get_den();
    for (std::size_t i = 0; i < dim; ++i) row[i] = -sign * a[i] * den;
    row[dim] = sign * c.get_num();
    rows.push_back(std::move(row));
  };
  for (const auto& f : facets) push(f.normal, f.offset, 1);
  for (const auto& e : equalities) {
    push(e.normal, e.offset, 1);
    push(e.normal, e.offset, -1);
  }
  IntVector t(dim + 1, Integer(0));
  t[dim] = 1;
  rows.push_back(std::move(t));

  std::vector<RationalVector> verts;
  for (const auto& r : dd::extreme_rays(rows)) {
    if (r[dim] == 0) throw Error(ErrorKind::Unbounded, "polyhedron has a recession direction");
    RationalVector x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = Rational(r[i], r[dim]);
    for (auto& xi : x) xi.canonicalize();
    verts.push_back(std::move(x));
  }
  sort_unique(verts);
  return verts;
}

/// Returns P with both representations (full-dimensional) or with an
/// irredundant V-rep and affine equations (lower-dimensional).
inline Polytope complete(const Polytope& p) {
  if (p.has_vertices() && (p.has_facets() || !p.full_dimensional())) return p;
  if (p.has_vertices()) return convex_hull(p.vertices());
  auto verts = vertices_from_hrep(p.dim(), p.facets(), p.equalities());
  if (verts.empty()) throw Error(ErrorKind::EmptySection, "empty polytope");
  return convex_hull(std::move(verts));
}

inline Polytope translate(const Polytope& p, const RationalVector& t) {
  Polytope q = complete(p);
  std::vector<RationalVector> verts;
  for (const auto& v : q.vertices()) verts.push_back(add(v, t));
  std::optional<std::vector<Facet>> facets;
  if (q.has_facets()) {
    facets.emplace();
    for (const auto& f : q.facets()) facets->push_back(Facet{f.normal, f.offset + dot(f.normal, t)});
  }
  std::vector<Facet> eqs;
  for (const auto& e : q.equalities()) eqs.push_back(Facet{e.normal, e.offset + dot(e.normal, t)});
  return Polytope(q.dim(), q.affine_dim(), std::move(verts), std::move(facets), std::move(eqs));
}

/// lambda * P for lambda > 0.
inline Polytope dilate(const Polytope& p, const Rational& lambda) {
  if (lambda <= 0) throw Error(ErrorKind::InvalidArgument, "dilate: factor must be positive");
  Polytope q = complete(p);
  std::vector<RationalVector> verts;
  for (const auto& v : q.vertices()) verts.push_back(scale(v, lambda));
  std::optional<std::vector<Facet>> facets;
  if (q.has_facets()) {
    facets.emplace();
    for (const auto& f : q.facets()) facets->push_back(Facet{f.normal, f.offset * lambda});
  }
  std::vector<Facet> eqs;
  for (const auto& e : q.equalities()) eqs.push_back(Facet{e.normal, e.offset * lambda});
  return Polytope(q.dim(), q.affine_dim(), std::move(verts), std::move(facets), std::move(eqs));
}

// ---------------------------------------------------------------------------
// Face structure from vertex-facet incidences

/// Sorted vertex indices of a face.
using VertexSet = std::vector<std::uint32_t>;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : s) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

class FaceIncidence {
 public:
  explicit FaceIncidence(const Polytope& p) : dim_(p.dim()) {
    if (!p.full_dimensional() || !p.has_vertices() || !p.has_facets()) {
      throw Error(ErrorKind::DimensionDeficient, "face structure needs a full-dimensional polytope with both representations");
    }
    const auto& verts = p.vertices();
    const auto& facets = p.facets();
    facet_vertices_.resize(facets.size());
    vertex_facets_.resize(verts.size());

    // Integer fast path: all data are small integers for the lattice shapes here.
    bool small = true;
    for (const auto& v : verts) {
      for (const auto& x : v) small = small && is_integral(x) && x.get_num().fits_sint_p();
    }
    for (const auto& f : facets) {
      small = small && is_integral(f.offset) && f.offset.get_num().fits_slong_p();
      for (const auto& x : f.normal) small = small && x.fits_sint_p();
    }

    if (small) {
      std::vector<std::vector<std::int64_t>> iv(verts.size());
      for (std::size_t i = 0; i < verts.size(); ++i) {
        for (const auto& x : verts[i]) iv[i].push_back(x.get_num().get_si());
      }
      for (std::size_t f = 0; f < facets.size(); ++f) {
        std::vector<std::int64_t> a;
        for (const auto& x : facets[f].normal) a.push_back(x.get_si());
        const std::int64_t c = facets[f].offset.get_num().get_si();
        for (std::size_t i = 0; i < verts.size(); ++i) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * iv[i][k];
          if (s == c) add(f, i);
        }
      }
    } else {
      for (std::size_t f = 0; f < facets.size(); ++f) {
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (dot(facets[f].normal, verts[i]) == facets[f].offset) add(f, i);
        }
      }
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t num_vertices() const { return vertex_facets_.size(); }
  std::size_t num_facets() const { return facet_vertices_.size(); }
  const VertexSet& facet(std::size_t f) const { return facet_vertices_[f]; }
  const std::vector<std::uint32_t>& facets_at(std::size_t v) const { return vertex_facets_[v]; }

  /// Facets of a face: the inclusion-maximal proper nonempty intersections
  /// with the polytope's facets.
  std::vector<VertexSet> subfaces(const VertexSet& face) const {
    std::vector<std::uint32_t> touching;
    for (auto v : face) touching.insert(touching.end(), vertex_facets_[v].begin(), vertex_facets_[v].end());
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());

    std::vector<VertexSet> cands;
    for (auto f : touching) {
      VertexSet inter;
      const auto& fv = facet_vertices_[f];
      std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(inter));
      if (inter.size() == face.size()) continue;
      cands.push_back(std::move(inter));
    }
    std::sort(cands.begin(), cands.end(), [](const VertexSet& a, const VertexSet& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    std::vector<VertexSet> maximal;
    for (auto& c : cands) {
      bool dominated = false;
      for (const auto& m : maximal) {
        if (m.size() > c.size() && std::includes(m.begin(), m.end(), c.begin(), c.end())) {
          dominated = true;
          break;
        }
      }
      if (!dominated) maximal.push_back(std::move(c));
    }
    return maximal;
  }

  /// faces[d] lists the d-dimensional faces, for d = 0 .. dim-1.
  std::vector<std::vector<VertexSet>> faces() const {
    std::vector<std::vector<VertexSet>> out(dim_);
    if (dim_ == 0) return out;
    out[dim_ - 1] = facet_vertices_;
    for (std::size_t d = dim_ - 1; d >= 1; --d) {
      std::unordered_set<VertexSet, VertexSetHash> seen;
      for (const auto& face : out[d]) {
        for (auto& sub : subfaces(face)) {
          if (seen.insert(sub).second) out[d - 1].push_back(std::move(sub));
        }
      }
      std::sort(out[d - 1].begin(), out[d - 1].end());
    }
    return out;
  }

 private:
  void add(std::size_t f, std::size_t v) {
    facet_vertices_[f].push_back(static_cast<std::uint32_t>(v));
    vertex_facets_[v].push_back(static_cast<std::uint32_t>(f));
  }

  std::size_t dim_;
  std::vector<VertexSet> facet_vertices_;
  std::vector<std::vector<std::uint32_t>> vertex_facets_;
};

/// Face counts (f_0, ..., f_{n-1}) by incidence closure.
inline std::vector<std::size_t> face_counts(const Polytope& p) {
  FaceIncidence inc(complete(p));
  std::vector<std::size_t> f(inc.dim(), 0);
  if (inc.dim() == 0) return f;
  if (inc.dim() == 1) {
    f[0] = inc.num_vertices();
    return f;
  }
  // Vertices are counted directly; the closure stops at edges.
  std::vector<VertexSet> level;
  for (std::size_t i = 0; i < inc.num_facets(); ++i) level.push_back(inc.facet(i));
  f[inc.dim() - 1] = level.size();
  for (std::size_t d = inc.dim() - 1; d >= 2; --d) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> next;
    for (const auto& face : level) {
      for (auto& sub : inc.subfaces(face)) {
        if (seen.insert(sub).second) next.push_back(std::move(sub));
      }
    }
    f[d - 1] = next.size();
    level = std::move(next);
  }
  f[0] = inc.num_vertices();
  return f;
}

// ---------------------------------------------------------------------------
// Volume

namespace detail {

inline Rational factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

inline void pulling_triangulation(const FaceIncidence& inc, const std::vector<RationalVector>& verts,
                                  const VertexSet& face, std::size_t d, std::vector<std::uint32_t>& chain,
                                  Rational& acc) {
  if (d == 1) {
    // An edge has exactly its two endpoints as vertices.
    linalg::Matrix m;
    const auto& base = verts[face[1]];
    for (auto c : chain) m.push_back(sub(verts[c], base));
    m.push_back(sub(verts[face[0]], base));
    acc += abs(linalg::determinant(std::move(m)));
    return;
  }
  const auto apex = face.front();
  chain.push_back(apex);
  for (const auto& sub_face : inc.subfaces(face)) {
    if (std::binary_search(sub_face.begin(), sub_face.end(), apex)) continue;
    pulling_triangulation(inc, verts, sub_face, d - 1, chain, acc);
  }
  chain.pop_back();
}

}  // namespace detail

/// Lebesgue volume via a pulling triangulation from the smallest vertex.
inline Rational polytope_volume(const Polytope& p) {
  if (!p.full_dimensional()) {
    throw Error(ErrorKind::DimensionDeficient,
                "volume of a " + std::to_string(p.affine_dim()) + "-dimensional polytope in R^" + std::to_string(p.dim()));
  }
  Polytope q = complete(p);
  const std::size_t n = q.dim();
  if (n == 0) return Rational(1);
  if (n == 1) return Rational(abs(Rational(q.vertices()[1][0] - q.vertices()[0][0])));
  FaceIncidence inc(q);
  VertexSet all(q.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> chain;
  Rational acc(0);
  detail::pulling_triangulation(inc, q.vertices(), all, n, chain, acc);
  return acc / detail::factorial(n);
}

/// k-volume of a k-dimensional polytope measured in the coordinate chart
/// that keeps the pivot coordinates of its affine hull.
inline Rational chart_volume(const Polytope& p) {
  Polytope q = complete(p);
  if (q.full_dimensional()) return polytope_volume(q);
  if (q.affine_dim() == 0) return Rational(1);
  auto coords = detail::pivot_columns(q.vertices());
  std::vector<RationalVector> chart;
  for (const auto& v : q.vertices()) chart.push_back(detail::select(v, coords));
  return polytope_volume(convex_hull(std::move(chart)));
}

// ---------------------------------------------------------------------------
// Projection and Minkowski sums

/// Orthogonal shadow of a polytope on v^perp, expressed in the integer chart
/// basis of the hyperplane lattice {x in Z^n : <x, v> = 0}.
struct ProjectedPolytope {
  Polytope shadow;                // dim n-1, chart coordinates
  std::vector<IntVector> chart;   // n-1 integer vectors spanning v^perp
  Rational chart_gram_det;        // det of the chart's Gram matrix

  /// Squared (n-1)-volume of the shadow in the ambient metric.
  Rational ambient_volume_squared() const {
    if (!shadow.full_dimensional()) return Rational(0);
    Rational v = polytope_volume(shadow);
    return v * v * chart_gram_det;
  }

  /// Maps chart coordinates back to the ambient space.
  RationalVector embed(const RationalVector& y) const {
    RationalVector x(chart.empty() ? 0 : chart.front().size(), Rational(0));
    for (std::size_t i = 0; i < chart.size(); ++i) {
      for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[i] * chart[i][k];
    }
    return x;
  }
};

inline ProjectedPolytope project_polytope(const Polytope& p, const IntVector& v) {
  require_same_dim(v.size(), p.dim(), "project_polytope");
  if (is_zero(v)) throw Error(ErrorKind::ZeroVector, "project_polytope: direction is zero");
  const std::size_t n = p.dim();
  Polytope q = complete(p);

  ProjectedPolytope out;
  out.chart = linalg::integer_kernel({v}, n);
  const linalg::Matrix basis = linalg::to_rational(out.chart);
  const linalg::Matrix g = linalg::gram(basis);
  out.chart_gram_det = basis.empty() ? Rational(1) : linalg::determinant(g);

  std::vector<RationalVector> shadow;
  for (const auto& x : q.vertices()) {
    // Chart coordinates y solve G y = B x (the v-component is orthogonal to B).
    RationalVector rhs(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = dot(basis[i], x);
    shadow.push_back(basis.empty() ? RationalVector{} : *linalg::solve(g, rhs));
  }
  if (n == 1) {
    out.shadow = Polytope(0, 0, std::vector<RationalVector>{RationalVector{}}, std::vector<Facet>{});
  } else {
    out.shadow = convex_hull(std::move(shadow));
  }
  return out;
}

/// P + [a, b].
inline Polytope minkowski_sum_segment(const Polytope& p, const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.size(), p.dim(), "minkowski_sum_segment");
  require_same_dim(b.size(), p.dim(), "minkowski_sum_segment");
  Polytope q = complete(p);
  std::vector<RationalVector> pts;
  pts.reserve(2 * q.vertices().size());
  for (const auto& v : q.vertices()) {
    pts.push_back(add(v, a));
    pts.push_back(add(v, b));
  }
  return convex_hull(std::move(pts));
}

/// Arithmetic mean of the vertices.
inline RationalVector vertex_centroid(const Polytope& p) {
  const auto& verts = p.vertices();
  RationalVector c(p.dim(), Rational(0));
  for (const auto& v : verts) c = add(c, v);
  return scale(c, Rational(1, static_cast<unsigned long>(verts.size())));
}

}  // namespace isozono
