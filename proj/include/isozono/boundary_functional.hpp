#pragma once

#include "isozono/number.hpp"
#include "isozono/polytope.hpp"
#include "isozono/zonotope.hpp"

#include <vector>

namespace isozono {

namespace detail {

inline void require_body(const Polytope& a, const char* where) {
  if (!a.full_dimensional()) {
    throw Error(ErrorKind::DimensionDeficient, std::string(where) + ": body must be full-dimensional");
  }
}

inline RationalVector as_rational(const LatticePoint& v) { return to_rational(std::span<const std::int64_t>(v)); }

}  // namespace detail

/// vol(A + [0, v]) - vol(A).
inline Rational directional_sweep(const Polytope& a, const IntVector& v) {
  require_same_dim(v.size(), a.dim(), "directional_sweep");
  if (is_zero(v)) throw Error(ErrorKind::ZeroVector, "directional_sweep: direction is zero");
  detail::require_body(a, "directional_sweep");
  const RationalVector origin(a.dim(), Rational(0));
  return polytope_volume(minkowski_sum_segment(a, origin, to_rational(std::span<const Integer>(v)))) -
         polytope_volume(a);
}

/// The three equal expressions for a sweep: the Minkowski-sum difference, its
/// square against |v|^2 times the squared shadow volume, and the mixed-volume
/// term n V(A, ..., A, [0, v]) read off as the slope of vol(A + t[0, v]).
struct SweepAgreement {
  Rational sweep;
  Rational sweep_squared;
  Rational projection_form_squared;  // |v|^2 * mu_{n-1}(P_v A)^2
  Rational mixed_volume_term;

  bool holds() const { return sweep_squared == projection_form_squared && mixed_volume_term == sweep; }
};

inline SweepAgreement sweep_agreement(const Polytope& a, const IntVector& v) {
  SweepAgreement out;
  out.sweep = directional_sweep(a, v);
  out.sweep_squared = out.sweep * out.sweep;
  out.projection_form_squared = Rational(norm_squared(v)) * project_polytope(a, v).ambient_volume_squared();
  const RationalVector origin(a.dim(), Rational(0));
  const RationalVector two_v = scale(to_rational(std::span<const Integer>(v)), Rational(2));
  out.mixed_volume_term = (polytope_volume(minkowski_sum_segment(a, origin, two_v)) - polytope_volume(a)) / 2;
  return out;
}

/// b(A) with the folded factor 2: b(A) = 2 sum_i sweep(A, v_i), since the
/// sweep along v_i and along -v_i are equal.
struct BoundaryValue {
  Rational value;
  std::vector<Rational> per_generator_sweeps;
};

inline BoundaryValue continuous_boundary(const Polytope& a, const Zonotope& z) {
  require_same_dim(a.dim(), z.dim(), "continuous_boundary");
  detail::require_body(a, "continuous_boundary");
  BoundaryValue out;
  out.value = 0;
  for (const auto& v : z.generators()) {
    out.per_generator_sweeps.push_back(directional_sweep(a, to_integer(std::span<const std::int64_t>(v))));
    out.value += out.per_generator_sweeps.back();
  }
  out.value *= 2;
  return out;
}

/// A + eps Z by iterated segment sums.
inline Polytope minkowski_sum_scaled_zonotope(const Polytope& a, const Zonotope& z, const Rational& eps) {
  Polytope acc = complete(a);
  for (const auto& v : z.generators()) {
    const RationalVector w = scale(detail::as_rational(v), eps);
    acc = minkowski_sum_segment(acc, negate(w), w);
  }
  return acc;
}

/// (vol(A + eps Z) - vol(A)) / eps for each eps.
inline std::vector<Rational> finite_difference_probe(const Polytope& a, const Zonotope& z,
                                                     const std::vector<Rational>& epsilons) {
  require_same_dim(a.dim(), z.dim(), "finite_difference_probe");
  detail::require_body(a, "finite_difference_probe");
  for (const auto& e : epsilons) {
    if (e <= 0) throw Error(ErrorKind::InvalidArgument, "finite_difference_probe: epsilon must be positive");
  }
  const Rational base = polytope_volume(a);
  std::vector<Rational> out;
  for (const auto& e : epsilons) out.push_back((polytope_volume(minkowski_sum_scaled_zonotope(a, z, e)) - base) / e);
  return out;
}

/// n-th powers of both sides of b(A) >= n mu(A)^{(n-1)/n} mu(Z)^{1/n}.
struct BrunnMinkowskiCertificate {
  Rational lhs_power;  // b(A)^n
  Rational rhs_power;  // n^n mu(A)^{n-1} mu(Z)
  bool homothetic = false;

  bool inequality_holds() const { return lhs_power >= rhs_power; }
  bool equality() const { return lhs_power == rhs_power; }
  /// Equality must occur exactly for homothets.
  bool consistent() const { return inequality_holds() && equality() == homothetic; }
};

inline BrunnMinkowskiCertificate brunn_minkowski_certificate(const Polytope& a, const Zonotope& z,
                                                              const Polytope& z_polytope) {
  require_same_dim(a.dim(), z.dim(), "brunn_minkowski_certificate");
  detail::require_body(a, "brunn_minkowski_certificate");
  const unsigned n = static_cast<unsigned>(z.dim());
  BrunnMinkowskiCertificate out;
  out.lhs_power = pow(continuous_boundary(a, z).value, n);
  out.rhs_power = pow(Rational(n), n) * pow(polytope_volume(a), n - 1) * zonotope_volume(z);
  out.homothetic = homothety_check(z_polytope, a).has_value();
  return out;
}

inline BrunnMinkowskiCertificate brunn_minkowski_certificate(const Polytope& a, const Zonotope& z) {
  return brunn_minkowski_certificate(a, z, zonotope_polytope(z));
}

}  // namespace isozono
