#pragma once

#include "isozono/linalg.hpp"
#include "isozono/number.hpp"
#include "isozono/polytope.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace isozono {

/// Basis of a lattice together with the determinant of its Gram matrix
/// (the squared covolume).
struct LatticeBasis {
  std::vector<IntVector> vectors;
  Rational gram_det;
};

inline LatticeBasis make_lattice_basis(std::vector<IntVector> vectors) {
  linalg::Matrix rows = linalg::to_rational(vectors);
  Rational det = rows.empty() ? Rational(1) : linalg::determinant(linalg::gram(rows));
  if (det <= 0) throw Error(ErrorKind::RankDeficient, "lattice basis vectors are linearly dependent");
  return LatticeBasis{std::move(vectors), std::move(det)};
}

inline void require_primitive(const IntVector& a, const char* where) {
  if (is_zero(a)) throw Error(ErrorKind::ZeroVector, where);
  if (!is_primitive(a)) throw Error(ErrorKind::NonPrimitive, where);
}

/// Integer basis of {x in Z^n : <x, a> = 0}, the dual of the projection
/// lattice of Z^n along a.
inline LatticeBasis dual_projection_lattice_basis(const IntVector& a) {
  require_primitive(a, "dual_projection_lattice_basis");
  if (a.size() < 2) throw Error(ErrorKind::InvalidArgument, "dual_projection_lattice_basis needs n >= 2");
  return make_lattice_basis(linalg::integer_kernel({a}, a.size()));
}

/// Squared determinant of the projection lattice P_a(Z^n), i.e. 1/|a|^2,
/// cross-checked against 1/gram_det of the kernel basis (det * dual det = 1).
inline Rational projection_lattice_det_squared(const IntVector& a) {
  require_primitive(a, "projection_lattice_det_squared");
  Rational closed_form = Rational(1) / Rational(norm_squared(a));
  if (a.size() == 1) return closed_form;
  Rational via_dual = Rational(1) / dual_projection_lattice_basis(a).gram_det;
  if (closed_form != via_dual) {
    throw Error(ErrorKind::InternalConsistency,
                "projection lattice determinant mismatch: " + format_rational(closed_form) + " vs " +
                    format_rational(via_dual));
  }
  return closed_form;
}

namespace detail {

struct IntBox {
  std::vector<std::int64_t> lo, hi;
};

inline IntBox integer_bounding_box(const Polytope& p) {
  IntBox box{std::vector<std::int64_t>(p.dim()), std::vector<std::int64_t>(p.dim())};
  for (std::size_t k = 0; k < p.dim(); ++k) {
    Rational lo = p.vertices().front()[k], hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v[k]);
      hi = std::max(hi, v[k]);
    }
    box.lo[k] = ceil_of(lo).get_si();
    box.hi[k] = floor_of(hi).get_si();
  }
  return box;
}

/// Calls visit(point) for every lattice point of p. The last coordinate is
/// solved as an interval from the constraints instead of being scanned.
inline void for_each_lattice_point(const Polytope& p,
                                   const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  const std::size_t n = p.dim();
  const IntBox box = integer_bounding_box(p);
  for (std::size_t k = 0; k < n; ++k) {
    if (box.lo[k] > box.hi[k]) return;
  }
  std::vector<const Facet*> ineq;
  if (p.has_facets()) {
    for (const auto& f : p.facets()) ineq.push_back(&f);
  }
  std::vector<std::int64_t> x(n, 0);

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k + 1 < n) {
      for (x[k] = box.lo[k]; x[k] <= box.hi[k]; ++x[k]) rec(k + 1);
      return;
    }
    Rational lo(box.lo[n - 1]), hi(box.hi[n - 1]);
    auto residual = [&](const Facet& f) {
      Rational r = f.offset;
      for (std::size_t i = 0; i + 1 < n; ++i) r -= f.normal[i] * Rational(static_cast<long>(x[i]));
      return r;
    };
    for (const Facet* f : ineq) {
      Rational r = residual(*f);
      const Integer& a = f->normal[n - 1];
      if (a == 0) {
        if (r < 0) return;
      } else if (a > 0) {
        hi = std::min(hi, Rational(r / a));
      } else {
        lo = std::max(lo, Rational(r / a));
      }
    }
    for (const auto& e : p.equalities()) {
      Rational r = residual(e);
      const Integer& a = e.normal[n - 1];
      if (a == 0) {
        if (r != 0) return;
      } else {
        Rational fixed = r / a;
        lo = std::max(lo, fixed);
        hi = std::min(hi, fixed);
      }
    }
    const std::int64_t first = ceil_of(lo).get_si();
    const std::int64_t last = floor_of(hi).get_si();
    for (x[n - 1] = first; x[n - 1] <= last; ++x[n - 1]) visit(x);
  };
  if (n == 0) {
    visit(x);
    return;
  }
  rec(0);
}

}  // namespace detail

/// |Z^n ∩ P| by bounding-box enumeration with exact membership.
inline Integer count_lattice_points(const Polytope& p) {
  Polytope q = complete(p);
  Integer count(0);
  detail::for_each_lattice_point(q, [&](const std::vector<std::int64_t>&) { ++count; });
  return count;
}

inline std::vector<std::vector<std::int64_t>> lattice_points(const Polytope& p) {
  Polytope q = complete(p);
  std::vector<std::vector<std::int64_t>> out;
  detail::for_each_lattice_point(q, [&](const std::vector<std::int64_t>& x) { out.push_back(x); });
  return out;
}

struct PickCount {
  Integer interior;
  Integer boundary;
  Rational area;  // interior + boundary/2 - 1
};

/// Area of a lattice polygon from its interior and boundary lattice points.
inline PickCount pick_area(const Polytope& p) {
  Polytope q = complete(p);
  if (q.dim() != 2 || !q.full_dimensional()) {
    throw Error(ErrorKind::DimensionMismatch, "pick_area needs a full-dimensional polygon");
  }
  for (const auto& v : q.vertices()) {
    for (const auto& x : v) {
      if (!is_integral(x)) throw Error(ErrorKind::NonInteger, "pick_area needs integer vertices");
    }
  }
  FaceIncidence inc(q);
  Integer boundary(0);
  for (std::size_t f = 0; f < inc.num_facets(); ++f) {
    const auto& edge = inc.facet(f);
    const auto& a = q.vertices()[edge[0]];
    const auto& b = q.vertices()[edge[1]];
    Integer dx = abs(Rational(b[0] - a[0]).get_num());
    Integer dy = abs(Rational(b[1] - a[1]).get_num());
    boundary += gcd(dx, dy);
  }
  Integer total = count_lattice_points(q);
  PickCount out{total - boundary, boundary, Rational(0)};
  out.area = Rational(out.interior) + Rational(out.boundary) / 2 - 1;
  return out;
}

}  // namespace isozono
