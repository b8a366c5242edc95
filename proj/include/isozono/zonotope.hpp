#pragma once

#include "isozono/linalg.hpp"
#include "isozono/number.hpp"
#include "isozono/pl_graph.hpp"
#include "isozono/polytope.hpp"
#include "isozono/text_io.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace isozono {

/// Centered zonotope Z = sum_i [-v_i, v_i] with primitive integer generators
/// in the same canonical order as PLGraph.
class Zonotope {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<LatticePoint>& generators() const { return generators_; }

  friend bool operator==(const Zonotope&, const Zonotope&) = default;

 private:
  friend Zonotope build_zonotope(const PLGraph& g);
  std::size_t dim_ = 0;
  std::vector<LatticePoint> generators_;
};

inline Zonotope build_zonotope(const PLGraph& g) {
  Zonotope z;
  z.dim_ = g.dim();
  z.generators_ = g.generators();
  return z;
}

inline Zonotope build_zonotope(std::size_t dim, std::vector<LatticePoint> generators) {
  return build_zonotope(validate_pl_graph(dim, std::move(generators)));
}

/// Collapses one-sided segments [0, w] into symmetric generators using
/// [0, v] + [0, -v] = [-v, v]. Every segment must have its negative listed
/// exactly once, otherwise the sum is not a centered zonotope.
inline Zonotope build_zonotope_from_segments(std::size_t dim, const std::vector<LatticePoint>& segments) {
  std::map<LatticePoint, std::int64_t> seen;
  for (const auto& w : segments) {
    require_same_dim(w.size(), dim, "build_zonotope_from_segments");
    if (is_zero(w)) throw Error(ErrorKind::ZeroVector, "segment " + format_point(w) + " is zero");
    if (!is_primitive(std::span<const std::int64_t>(w))) {
      throw Error(ErrorKind::NonPrimitive, "segment " + format_point(w) + " is not primitive");
    }
    if (++seen[w] > 1) throw Error(ErrorKind::DuplicateGenerator, "segment " + format_point(w) + " is listed twice");
  }
  std::vector<LatticePoint> gens;
  for (const auto& [w, _] : seen) {
    if (!seen.count(negate(w))) {
      throw Error(ErrorKind::InvalidArgument, "segment " + format_point(w) + " has no opposite segment");
    }
    if (sign_canonical(w) == w) gens.push_back(w);
  }
  return build_zonotope(dim, std::move(gens));
}

/// h(u) = sum_i |<u, v_i>|.
inline Rational support(const Zonotope& z, const RationalVector& u) {
  require_same_dim(u.size(), z.dim(), "support");
  Rational h(0);
  for (const auto& v : z.generators()) h += abs(dot(to_rational(std::span<const std::int64_t>(v)), u));
  return h;
}

inline Integer support(const Zonotope& z, const IntVector& u) {
  require_same_dim(u.size(), z.dim(), "support");
  Integer h(0);
  for (const auto& v : z.generators()) h += abs(dot(to_integer(std::span<const std::int64_t>(v)), u));
  return h;
}

namespace detail {

inline void for_each_subset(std::size_t k, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (r > k) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == k - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Generalized cross product of n-1 vectors in Z^n: the cofactor vector,
/// orthogonal to all of them and zero iff they are dependent.
inline IntVector cofactor_normal(const std::vector<const LatticePoint*>& rows, std::size_t n) {
  IntVector u(n);
  for (std::size_t j = 0; j < n; ++j) {
    linalg::IntMatrix minor;
    for (const auto* r : rows) {
      IntVector row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.emplace_back(static_cast<long>((*r)[c]));
      }
      minor.push_back(std::move(row));
    }
    Integer d = linalg::determinant(std::move(minor));
    u[j] = (j % 2 == 0) ? d : Integer(-d);
  }
  return u;
}

/// Primitive, sign-canonical normals of the hyperplanes spanned by the
/// generators (one per antipodal pair).
inline std::vector<IntVector> hyperplane_normals(const Zonotope& z) {
  const std::size_t n = z.dim();
  if (n == 1) return {IntVector{Integer(1)}};
  std::set<IntVector, LexLess<Integer>> normals;
  for_each_subset(z.generators().size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<const LatticePoint*> rows;
    for (auto i : idx) rows.push_back(&z.generators()[i]);
    IntVector u = cofactor_normal(rows, n);
    if (!is_zero(u)) normals.insert(sign_canonical(make_primitive(std::move(u))));
  });
  return {normals.begin(), normals.end()};
}

inline std::int64_t checked_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "zonotope coordinates exceed the 64-bit kernel");
  return x.get_si();
}

// Guards the int64 kernel: |<u, w>| for any facet normal u and any point w of
// Z must stay well inside 64 bits.
inline void require_int64_range(const Zonotope& z, const std::vector<IntVector>& normals) {
  Integer max_u(0), max_w(0);
  for (const auto& u : normals) {
    for (const auto& x : u) max_u = std::max(max_u, Integer(abs(x)));
  }
  for (std::size_t k = 0; k < z.dim(); ++k) {
    Integer s(0);
    for (const auto& v : z.generators()) s += std::abs(v[k]);
    max_w = std::max(max_w, s);
  }
  Integer bound = max_u * max_w * static_cast<unsigned long>(z.dim());
  if (bound >= (Integer(1) << 62)) {
    throw Error(ErrorKind::InvalidArgument, "zonotope coordinates exceed the 64-bit kernel");
  }
}

struct ZonotopeFacets {
  std::vector<LatticePoint> normals;  // both orientations
  std::vector<std::int64_t> offsets;
};

inline ZonotopeFacets facets_int64(const Zonotope& z) {
  auto normals = hyperplane_normals(z);
  require_int64_range(z, normals);
  ZonotopeFacets out;
  for (const auto& u : normals) {
    // Each spanned hyperplane supports a facet pair: the tight generators have
    // rank n-1 by construction.
    LatticePoint a;
    for (const auto& x : u) a.push_back(checked_int64(x));
    std::int64_t h = 0;
    for (const auto& v : z.generators()) h += std::abs(dot(a, v));
    out.normals.push_back(a);
    out.offsets.push_back(h);
    out.normals.push_back(negate(a));
    out.offsets.push_back(h);
  }
  return out;
}

inline std::size_t int_rank(const std::vector<const LatticePoint*>& rows) {
  linalg::IntMatrix m;
  for (const auto* r : rows) m.push_back(to_integer(std::span<const std::int64_t>(*r)));
  return linalg::rank(m);
}

/// Vertices by breadth-first search on the edge graph. Vertices are the sums
/// sum_i s_i v_i over sign vectors s of the generators' hyperplane
/// arrangement; neighbours differ in one sign, and the edge w -> w - 2 s_i v_i
/// exists iff the facets tight at w that contain direction v_i span rank n-1.
inline std::vector<LatticePoint> vertices_int64(const Zonotope& z, const ZonotopeFacets& facets) {
  const std::size_t n = z.dim();
  const auto& gens = z.generators();

  // Start at the maximizer of a generic direction (1, M, M^2, ...), with M
  // beyond twice every coordinate so no generator is orthogonal to it.
  std::int64_t max_coord = 0;
  for (const auto& v : gens) {
    for (auto x : v) max_coord = std::max(max_coord, std::abs(x));
  }
  LatticePoint generic(n);
  std::int64_t power = 1;
  for (std::size_t k = 0; k < n; ++k) {
    generic[k] = power;
    power *= 2 * max_coord + 1;
  }
  LatticePoint start(n, 0);
  std::vector<std::int8_t> start_signs(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    start_signs[i] = dot(generic, gens[i]) > 0 ? 1 : -1;
    for (std::size_t k = 0; k < n; ++k) start[k] += start_signs[i] * gens[i][k];
  }

  std::unordered_map<LatticePoint, std::vector<std::int8_t>, LatticePointHash> found;
  std::deque<LatticePoint> queue;
  found.emplace(start, start_signs);
  queue.push_back(start);
  std::vector<const LatticePoint*> tight, along;
  while (!queue.empty()) {
    LatticePoint w = std::move(queue.front());
    queue.pop_front();
    const auto signs = found.at(w);
    tight.clear();
    for (std::size_t f = 0; f < facets.normals.size(); ++f) {
      if (dot(facets.normals[f], w) == facets.offsets[f]) tight.push_back(&facets.normals[f]);
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      along.clear();
      for (const auto* u : tight) {
        if (dot(*u, gens[i]) == 0) along.push_back(u);
      }
      if (along.size() + 1 < n) continue;
      // Distinct non-antipodal primitive normals are pairwise independent,
      // so for n <= 3 the count decides the rank.
      if (n >= 4 && int_rank(along) + 1 < n) continue;
      LatticePoint next = w;
      for (std::size_t k = 0; k < n; ++k) next[k] -= 2 * signs[i] * gens[i][k];
      if (found.count(next)) continue;
      auto next_signs = signs;
      next_signs[i] = static_cast<std::int8_t>(-signs[i]);
      found.emplace(next, std::move(next_signs));
      queue.push_back(std::move(next));
    }
  }
  std::vector<LatticePoint> out;
  out.reserve(found.size());
  for (auto& [w, _] : found) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Facet> to_facets(const ZonotopeFacets& f) {
  std::vector<Facet> out;
  for (std::size_t i = 0; i < f.normals.size(); ++i) {
    out.push_back(Facet{to_integer(std::span<const std::int64_t>(f.normals[i])), Rational(static_cast<long>(f.offsets[i]))});
  }
  return out;
}

inline std::vector<RationalVector> to_rational_points(const std::vector<LatticePoint>& pts) {
  std::vector<RationalVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_rational(std::span<const std::int64_t>(p)));
  return out;
}

}  // namespace detail

/// 2^n * sum over n-subsets of generators of |det|.
inline Rational zonotope_volume(const Zonotope& z) {
  const std::size_t n = z.dim();
  Integer total(0);
  detail::for_each_subset(z.generators().size(), n, [&](const std::vector<std::size_t>& idx) {
    linalg::IntMatrix m;
    for (auto i : idx) m.push_back(to_integer(std::span<const std::int64_t>(z.generators()[i])));
    total += abs(linalg::determinant(std::move(m)));
  });
  return Rational(total * (Integer(1) << static_cast<unsigned>(n)));
}

/// H-representation: one facet pair per hyperplane spanned by n-1 generators,
/// offset h(u).
inline Polytope zonotope_hrep(const Zonotope& z) {
  return Polytope(z.dim(), z.dim(), std::nullopt, detail::to_facets(detail::facets_int64(z)));
}

inline Polytope zonotope_vertices(const Zonotope& z) {
  auto facets = detail::facets_int64(z);
  return Polytope(z.dim(), z.dim(), detail::to_rational_points(detail::vertices_int64(z, facets)), std::nullopt);
}

/// Both representations.
inline Polytope zonotope_polytope(const Zonotope& z) {
  auto facets = detail::facets_int64(z);
  auto verts = detail::vertices_int64(z, facets);
  return Polytope(z.dim(), z.dim(), detail::to_rational_points(verts), detail::to_facets(facets));
}

struct FVector {
  std::vector<std::size_t> counts;  // f_0 .. f_{n-1}

  bool euler_holds() const {
    long long s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) s += (i % 2 ? -1LL : 1LL) * static_cast<long long>(counts[i]);
    return s == 1 - (counts.size() % 2 ? -1 : 1);
  }

  friend bool operator==(const FVector&, const FVector&) = default;
};

inline FVector f_vector(const Polytope& p) { return FVector{face_counts(p)}; }

inline FVector f_vector(const Zonotope& z) { return f_vector(zonotope_polytope(z)); }

namespace detail {

inline void check_axis(const Zonotope& z, std::size_t axis) {
  if (axis >= z.dim()) {
    throw Error(ErrorKind::InvalidArgument,
                "axis " + std::to_string(axis) + " out of range for dimension " + std::to_string(z.dim()));
  }
}

inline RationalVector drop_coordinate(const RationalVector& x, std::size_t axis) {
  RationalVector y;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k != axis) y.push_back(x[k]);
  }
  return y;
}

inline Polytope chart_hull(std::vector<RationalVector> pts, std::size_t n) {
  if (n == 0) return Polytope(0, 0, std::vector<RationalVector>{RationalVector{}}, std::vector<Facet>{});
  return convex_hull(std::move(pts));
}

}  // namespace detail

/// The face of Z maximizing <e_axis, .>: F = t + Z(T) where T are the
/// generators with zero axis coordinate and t = sum of the others, signed.
struct FaceResult {
  Polytope face;              // in the chart dropping coordinate `axis`
  RationalVector translation; // t, ambient coordinates
  Rational level;             // h(e_axis)
  bool is_facet = false;
};

inline FaceResult facet_polytope(const Zonotope& z, std::size_t axis) {
  detail::check_axis(z, axis);
  const std::size_t n = z.dim();
  FaceResult out;
  out.translation.assign(n, Rational(0));
  std::vector<LatticePoint> lying;
  for (const auto& v : z.generators()) {
    if (v[axis] == 0) {
      lying.push_back(v);
    } else {
      const long s = v[axis] > 0 ? 1 : -1;
      for (std::size_t k = 0; k < n; ++k) out.translation[k] += s * static_cast<long>(v[k]);
    }
  }
  out.level = out.translation[axis];

  // Vertices of t + Z(T): sums over sign choices realized as vertices of the
  // face, taken from the full vertex set (faces of polytopes are exposed).
  std::vector<RationalVector> face_pts;
  auto facets = detail::facets_int64(z);
  for (const auto& w : detail::vertices_int64(z, facets)) {
    if (w[axis] == out.level) {
      face_pts.push_back(detail::drop_coordinate(to_rational(std::span<const std::int64_t>(w)), axis));
    }
  }
  out.face = detail::chart_hull(std::move(face_pts), n - 1);
  linalg::IntMatrix m;
  for (const auto& v : lying) m.push_back(to_integer(std::span<const std::int64_t>(v)));
  out.is_facet = linalg::rank(m) + 1 == n;
  return out;
}

/// Z cut by {x_axis = level}, in the chart dropping coordinate `axis`.
inline Polytope hyperplane_section(const Zonotope& z, std::size_t axis, const Rational& level) {
  detail::check_axis(z, axis);
  const std::size_t n = z.dim();
  IntVector e(n, Integer(0));
  e[axis] = 1;
  const Integer h = support(z, e);
  if (abs(level) > h) {
    throw Error(ErrorKind::EmptySection,
                "section at level " + format_rational(level) + " misses Z (|level| > " + h.get_str() + ")");
  }
  if (n == 1) return detail::chart_hull({}, 0);
  std::vector<Facet> chart;
  for (const auto& f : detail::to_facets(detail::facets_int64(z))) {
    IntVector a;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != axis) a.push_back(f.normal[k]);
    }
    Rational c = f.offset - f.normal[axis] * level;
    if (is_zero(a)) continue;  // the cut is parallel to this facet; |level| <= h keeps it satisfied
    chart.push_back(make_facet(a, c));
  }
  std::sort(chart.begin(), chart.end());
  chart.erase(std::unique(chart.begin(), chart.end()), chart.end());
  return convex_hull(vertices_from_hrep(n - 1, chart));
}

struct Homothety {
  Rational scale;
  RationalVector translation;

  friend bool operator==(const Homothety&, const Homothety&) = default;
};

/// (lambda, t) with Q = lambda P + t and lambda > 0, if one exists.
inline std::optional<Homothety> homothety_check(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "homothety_check: dimensions differ");
  Polytope a = complete(p), b = complete(q);
  if (a.affine_dim() != b.affine_dim()) return std::nullopt;
  if (a.vertices().size() != b.vertices().size()) return std::nullopt;
  const std::size_t n = a.dim();
  if (n == 0) return Homothety{Rational(1), {}};
  // Scale from the extent along the first coordinate with nonzero width.
  std::optional<Rational> lambda;
  for (std::size_t k = 0; k < n && !lambda; ++k) {
    auto extent = [k](const std::vector<RationalVector>& vs) -> Rational {
      Rational lo = vs.front()[k], hi = lo;
      for (const auto& v : vs) {
        lo = std::min(lo, v[k]);
        hi = std::max(hi, v[k]);
      }
      return hi - lo;
    };
    const Rational wa = extent(a.vertices()), wb = extent(b.vertices());
    if (wa == 0 && wb == 0) continue;
    if (wa == 0 || wb == 0) return std::nullopt;
    lambda = wb / wa;
  }
  if (!lambda) lambda = Rational(1);  // both are single points
  const RationalVector t = sub(vertex_centroid(b), scale(vertex_centroid(a), *lambda));
  std::vector<RationalVector> mapped;
  for (const auto& v : a.vertices()) mapped.push_back(add(scale(v, *lambda), t));
  sort_unique(mapped);
  if (mapped != b.vertices()) return std::nullopt;
  return Homothety{*lambda, t};
}

// Text format: "dim n" followed by one generator row per line.

inline std::string write_zonotope(const Zonotope& z) {
  std::string out = "dim " + std::to_string(z.dim()) + "\n";
  for (const auto& v : z.generators()) out += io::join(v) + "\n";
  return out;
}

inline Zonotope read_zonotope(const std::string& text) {
  io::LineReader in(text);
  std::vector<std::string> tok;
  if (!in.next(tok) || tok.size() != 2 || tok[0] != "dim") in.fail("expected 'dim n'");
  const std::size_t n = in.count(tok[1]);
  std::vector<LatticePoint> gens;
  while (in.next(tok)) {
    if (tok.size() != n) in.fail("generator row needs " + std::to_string(n) + " integers");
    LatticePoint v;
    for (const auto& t : tok) v.push_back(in.int64(t));
    gens.push_back(std::move(v));
  }
  return build_zonotope(n, std::move(gens));
}

}  // namespace isozono
