#pragma once

#include "isozono/boundary_functional.hpp"
#include "isozono/catalog.hpp"
#include "isozono/lattice.hpp"
#include "isozono/pl_graph.hpp"
#include "isozono/polytope.hpp"
#include "isozono/search.hpp"
#include "isozono/zonotope.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace isozono::regression {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> checks;  // one line per sub-check, prefixed ok/FAIL
  double seconds = 0;
};

namespace detail {

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}

  bool check(bool ok, const std::string& what) {
    r_.checks.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    all_ = all_ && ok;
    return ok;
  }
  bool all() const { return all_; }

 private:
  CriterionResult& r_;
  bool all_ = true;
};

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return "(" + os.str() + ")";
}

inline Zonotope builtin_zonotope(const std::string& name) { return build_zonotope(builtin_graph(name).graph()); }

inline Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t n, std::int64_t radius) {
  std::uniform_int_distribution<std::int64_t> coord(-radius, radius);
  for (;;) {
    std::vector<RationalVector> pts(n + 3 + rng() % 5, RationalVector(n));
    for (auto& p : pts) {
      for (auto& x : p) x = coord(rng);
    }
    Polytope p = convex_hull(pts);
    if (p.full_dimensional()) return p;
  }
}

inline Polytope homothet(const Polytope& p, const Rational& s, const RationalVector& t) {
  std::vector<RationalVector> out;
  for (const auto& v : p.vertices()) out.push_back(add(scale(v, s), t));
  return convex_hull(out);
}

/// Minimum boundary over m-subsets of [-r, r]^2 whose smallest point is the
/// origin, by plain enumeration on a bitmap grid; independent of the pruned
/// search.
inline std::pair<std::int64_t, std::size_t> brute_force_min_2d(const PLGraph& g, std::size_t m, int r) {
  std::vector<LatticePoint> after;
  for (int x = -r; x <= r; ++x) {
    for (int y = -r; y <= r; ++y) {
      if (x > 0 || (x == 0 && y > 0)) after.push_back({x, y});
    }
  }
  std::int64_t reach = 0;
  for (const auto& v : g.generators()) reach = std::max({reach, std::abs(v[0]), std::abs(v[1])});
  const std::int64_t width = 2 * (r + reach) + 1;
  std::vector<char> grid(static_cast<std::size_t>(width * width), 0);
  auto cell = [&](std::int64_t x, std::int64_t y) { return static_cast<std::size_t>((x + r + reach) * width + y + r + reach); };

  std::int64_t best = -1;
  std::size_t ties = 0;
  std::vector<std::size_t> pick;
  std::vector<LatticePoint> members{{0, 0}};
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (members.size() == m) {
      for (const auto& p : members) grid[cell(p[0], p[1])] = 1;
      std::int64_t b = 0;
      for (const auto& p : members) {
        for (const auto& v : g.generators()) {
          b += !grid[cell(p[0] + v[0], p[1] + v[1])] + !grid[cell(p[0] - v[0], p[1] - v[1])];
        }
      }
      for (const auto& p : members) grid[cell(p[0], p[1])] = 0;
      if (best < 0 || b < best) {
        best = b;
        ties = 0;
      }
      ties += b == best;
      return;
    }
    for (std::size_t i = from; i < after.size(); ++i) {
      members.push_back(after[i]);
      rec(i + 1);
      members.pop_back();
    }
  };
  rec(0);
  return {best, ties};
}

inline LatticeSet square_block(std::int64_t side) {
  std::vector<LatticePoint> pts;
  for (std::int64_t x = 0; x < side; ++x) {
    for (std::int64_t y = 0; y < side; ++y) pts.push_back({x, y});
  }
  return LatticeSet(2, std::move(pts));
}

}  // namespace detail

inline CriterionResult criterion_fvectors() {
  CriterionResult r{1, "f-vector regression for the linf zonotopes", false, {}, 0};
  detail::Checker c(r);
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> expected{
      {"linf:2", {8, 8}}, {"linf:3", {96, 144, 50}}, {"linf:4", {5376, 11328, 7312, 1360}}};
  const std::vector<double> limits{1, 10, 600};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    auto f = f_vector(detail::builtin_zonotope(expected[i].first)).counts;
    const double s = detail::seconds_since(t0);
    c.check(f == expected[i].second, expected[i].first + " f-vector " + detail::join(f) + " expected " +
                                         detail::join(expected[i].second));
    c.check(s < limits[i], expected[i].first + " took " + std::to_string(s) + " s (limit " +
                               std::to_string(static_cast<int>(limits[i])) + " s)");
  }
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_truncated_24_cell() {
  CriterionResult r{2, "truncated 24-cell data for the D4 crosspolytope tessellation", false, {}, 0};
  detail::Checker c(r);
  auto t0 = std::chrono::steady_clock::now();
  const auto spec = builtin_graph("d4cross");
  const Zonotope zc = build_zonotope_from_segments(4, spec.original_segments);
  const Polytope p = zonotope_polytope(zc);

  std::set<RationalVector> orbit;
  std::vector<std::int64_t> base{0, 2, 4, 6};
  std::sort(base.begin(), base.end());
  do {
    for (int signs = 0; signs < 16; ++signs) {
      RationalVector v(4);
      for (int k = 0; k < 4; ++k) v[k] = Rational((signs >> k & 1) ? -base[k] : base[k]);
      orbit.insert(v);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::set<RationalVector> verts(p.vertices().begin(), p.vertices().end());
  c.check(orbit.size() == 192 && verts == orbit,
          "vertex set is the signed-permutation orbit of (0,2,4,6): " + std::to_string(verts.size()) + " vertices");

  auto f = f_vector(p).counts;
  c.check(f == std::vector<std::size_t>{192, 384, 240, 48}, "f-vector " + detail::join(f) + " expected (192,384,240,48)");

  // Stated facet set: pair-type normals at 20, axes at 12, all-ones at 24.
  std::set<std::pair<IntVector, Rational>> stated, computed;
  std::set<IntVector> stated_normals, computed_normals;
  for (std::size_t i = 0; i < 4; ++i) {
    for (int s : {-1, 1}) {
      IntVector e(4, Integer(0));
      e[i] = s;
      stated.insert({e, Rational(12)});
    }
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (int si : {-1, 1}) {
        for (int sj : {-1, 1}) {
          IntVector v(4, Integer(0));
          v[i] = si;
          v[j] = sj;
          stated.insert({v, Rational(20)});
        }
      }
    }
  }
  for (int signs = 0; signs < 16; ++signs) {
    IntVector w(4);
    for (int k = 0; k < 4; ++k) w[k] = (signs >> k & 1) ? -1 : 1;
    stated.insert({w, Rational(24)});
  }
  for (const auto& [n, h] : stated) stated_normals.insert(n);
  std::map<std::size_t, std::set<std::string>> offsets_by_support;
  for (const auto& fct : p.facets()) {
    computed.insert({fct.normal, fct.offset});
    computed_normals.insert(fct.normal);
    std::size_t support = 0;
    for (const auto& x : fct.normal) support += x != 0;
    offsets_by_support[support].insert(fct.offset.get_str());
  }
  c.check(computed_normals == stated_normals, "facet normals are the 8 axis, 24 pair and 16 all-ones directions");
  std::ostringstream got;
  for (const auto& [support, offs] : offsets_by_support) {
    got << " support " << support << ": offset";
    for (const auto& o : offs) got << ' ' << o;
  }
  c.check(computed == stated, "facet inequalities equal the stated set (axis 12, pair 20, all-ones 24); computed" +
                                  got.str());
  const double s = detail::seconds_since(t0);
  c.check(s < 60, "runtime " + std::to_string(s) + " s (limit 60 s)");
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_boundary_identity() {
  CriterionResult r{3, "edge boundary equals twice the projections plus gaps", false, {}, 0};
  detail::Checker c(r);
  std::mt19937_64 rng(3);
  for (const auto& name : builtin_graph_names()) {
    const PLGraph g = builtin_graph(name).graph();
    const std::size_t n = g.dim();
    const std::int64_t radius = n == 1 ? 30 : n == 2 ? 5 : 2;
    std::uniform_int_distribution<std::int64_t> coord(-radius, radius);
    std::uniform_int_distribution<std::size_t> size(1, 40);
    std::size_t failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t target = size(rng);
      LatticePointSet pts;
      while (pts.size() < target) {
        LatticePoint p(n);
        for (auto& x : p) x = coord(rng);
        pts.insert(std::move(p));
      }
      auto rep = boundary_identity_report(g, LatticeSet(n, std::vector<LatticePoint>(pts.begin(), pts.end())));
      failures += !rep.identity_holds;
    }
    c.check(failures == 0, name + ": 1000 sets, " + std::to_string(failures) + " failures");
  }
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_projection_lattice() {
  CriterionResult r{4, "projection lattice determinant from the kernel basis", false, {}, 0};
  detail::Checker c(r);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> coord(-9, 9);
  std::size_t failures = 0, done = 0;
  while (done < 200) {
    const std::size_t n = 2 + rng() % 3;
    IntVector a(n);
    for (auto& x : a) x = coord(rng);
    if (is_zero(a)) continue;
    a = make_primitive(a);
    const auto basis = dual_projection_lattice_basis(a);
    const bool ok = basis.vectors.size() == n - 1 && basis.gram_det == Rational(norm_squared(a)) &&
                    projection_lattice_det_squared(a) == Rational(1) / Rational(norm_squared(a));
    failures += !ok;
    ++done;
  }
  c.check(failures == 0, "200 primitive vectors, n in 2..4: " + std::to_string(failures) + " failures");
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_boundary_of_zonotope() {
  CriterionResult r{5, "b(Z) = n vol(Z) for the builtin zonotopes", false, {}, 0};
  detail::Checker c(r);
  for (const char* name : {"l1:2", "l1:3", "l1:4", "linf:2", "linf:3", "tri", "d4cross"}) {
    const Zonotope z = detail::builtin_zonotope(name);
    const Rational b = continuous_boundary(zonotope_polytope(z), z).value;
    const Rational rhs = Rational(static_cast<long>(z.dim())) * zonotope_volume(z);
    c.check(b == rhs, std::string(name) + ": b(Z) = " + b.get_str() + ", n vol(Z) = " + rhs.get_str());
  }
  const Zonotope sq = detail::builtin_zonotope("l1:2"), oct = detail::builtin_zonotope("linf:2");
  c.check(continuous_boundary(zonotope_polytope(sq), sq).value == 8, "b = 8 for the L1 square");
  c.check(continuous_boundary(zonotope_polytope(oct), oct).value == 56, "b = 56 for Z_2");
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_brunn_minkowski() {
  CriterionResult r{6, "Brunn-Minkowski inequality with equality exactly for homothets", false, {}, 0};
  detail::Checker c(r);
  std::mt19937_64 rng(6);
  for (const auto& name : builtin_graph_names()) {
    const auto spec = builtin_graph(name);
    if (spec.dim > 3) continue;
    const Zonotope z = build_zonotope(spec.graph());
    const Polytope zp = zonotope_polytope(z);
    const std::size_t n = z.dim();
    std::size_t violations = 0, equalities = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Polytope a;
      if (trial % 10 == 0) {
        RationalVector t(n);
        for (auto& x : t) x = ratio(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        a = detail::homothet(zp, ratio(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 2)), t);
      } else {
        a = detail::random_lattice_polytope(rng, n, n == 1 ? 9 : n == 2 ? 5 : 3);
      }
      const auto cert = brunn_minkowski_certificate(a, z, zp);
      violations += !cert.inequality_holds() || cert.equality() != cert.homothetic;
      equalities += cert.equality();
    }
    c.check(violations == 0, name + ": 100 bodies, " + std::to_string(equalities) + " equality cases, " +
                                 std::to_string(violations) + " violations");
  }
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_facets_and_sections() {
  CriterionResult r{7, "facets and sections of Z_3", false, {}, 0};
  detail::Checker c(r);
  const Zonotope z3 = detail::builtin_zonotope("linf:3");
  const Polytope z2 = zonotope_polytope(detail::builtin_zonotope("linf:2"));
  auto face = homothety_check(z2, facet_polytope(z3, 0).face);
  c.check(face && face->scale == 1, "facet on axis 1 is a translate of Z_2");
  auto central = homothety_check(z2, hyperplane_section(z3, 0, Rational(0)));
  c.check(central && central->scale == 3, "central section on axis 1 is 3 Z_2");
  const Polytope off = hyperplane_section(z3, 0, Rational(3));
  c.check(!homothety_check(z2, off).has_value(), "section at level 3 is not homothetic to Z_2");
  c.check(off.vertices().size() != 8,
          "section at level 3 has " + std::to_string(off.vertices().size()) + " vertices (not an octagon)");
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_exhaustive_search() {
  CriterionResult r{8, "exhaustive minimum boundaries at desk scale", false, {}, 0};
  detail::Checker c(r);
  auto t0 = std::chrono::steady_clock::now();
  const PLGraph linf = builtin_graph("linf:2").graph();
  std::ostringstream mins;
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto res = exhaustive_min_boundary(linf, m, 3);
    const auto [oracle, ties] = detail::brute_force_min_2d(linf, m, 3);
    bool recount = true;
    for (const auto& w : res.witnesses) recount = recount && edge_boundary_direct(linf, w) == res.min_boundary;
    c.check(res.exhaustive && res.min_boundary == oracle && res.optimal_count == ties && recount,
            "linf:2 m=" + std::to_string(m) + ": search " + std::to_string(res.min_boundary) + ", recount " +
                std::to_string(oracle) + ", optimal sets " + std::to_string(res.optimal_count) + "/" +
                std::to_string(ties));
    if (m == 1) c.check(res.min_boundary == 8, "linf:2 m=1 gives 8");
    if (m == 2) c.check(res.min_boundary == 14, "linf:2 m=2 gives 14");
  }
  const PLGraph l1 = builtin_graph("l1:2").graph();
  for (std::int64_t s = 0; s <= 2; ++s) {
    const std::size_t m = static_cast<std::size_t>((s + 1) * (s + 1));
    const auto res = exhaustive_min_boundary(l1, m, 3);
    const bool has_box =
        std::find(res.witnesses.begin(), res.witnesses.end(), detail::square_block(s + 1)) != res.witnesses.end();
    c.check(has_box && res.min_boundary == 4 * (s + 1),
            "l1:2 m=" + std::to_string(m) + ": minimum " + std::to_string(res.min_boundary) + ", box witness " +
                (has_box ? "present" : "missing"));
  }
  const double s = detail::seconds_since(t0);
  c.check(s < 300, "runtime " + std::to_string(s) + " s (limit 300 s)");
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_limiting_shape() {
  CriterionResult r{9, "limiting-shape evidence", false, {}, 0};
  detail::Checker c(r);
  const PLGraph linf = builtin_graph("linf:2").graph();
  const auto octagon = zonotope_point_set(linf, Rational(1));
  c.check(octagon.cardinality == 37 && octagon.boundary == 64, "Z^2 ∩ Z_2 has " +
                                                                   std::to_string(octagon.cardinality) +
                                                                   " points, boundary " +
                                                                   std::to_string(octagon.boundary));
  const LatticeSet canon = octagon.set.canonical();
  const auto family = zonotope_family(linf, 37);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto res = local_search_min_boundary(linf, 37, 200000, seed);
    const bool found = std::find(res.witnesses.begin(), res.witnesses.end(), canon) != res.witnesses.end();
    c.check(res.min_boundary == 64 && found, "seed " + std::to_string(seed) + ": best " +
                                                 std::to_string(res.min_boundary) + ", octagon " +
                                                 (found ? "returned" : "not returned"));
    if (found) {
      const auto a = shape_analysis(family, canon);
      c.check(a.hull_facets == 8, "seed " + std::to_string(seed) + ": hull has " + std::to_string(a.hull_facets) +
                                      " supporting directions");
    }
  }
  const PLGraph tri = builtin_graph("tri").graph();
  const LatticeSet b1(2, {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  const auto res = exhaustive_min_boundary(tri, 7, 2);
  c.check(res.min_boundary == 18 && edge_boundary_direct(tri, b1) == 18,
          "tri m=7: exhaustive " + std::to_string(res.min_boundary) + ", B_1 " +
              std::to_string(edge_boundary_direct(tri, b1)));
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_convergence() {
  CriterionResult r{10, "convergence of point counts and boundaries", false, {}, 0};
  detail::Checker c(r);
  auto off = [](const Rational& q) -> Rational { return abs(Rational(q - 1)); };
  std::vector<Rational> alphas;
  for (long a = 1; a <= 50; ++a) alphas.emplace_back(a);
  const auto rows = convergence_experiment(builtin_graph("l1:2").graph(), alphas);
  std::size_t mismatches = 0;
  for (long a = 1; a <= 50; ++a) {
    const auto& row = rows[static_cast<std::size_t>(a - 1)];
    mismatches += row.points != (2 * a + 1) * (2 * a + 1) || row.volume != 4 * a * a ||
                  row.discrete_boundary != 8 * a + 4 || row.continuous_boundary != 8 * a;
  }
  c.check(mismatches == 0, "l1:2 closed forms for alpha = 1..50: " + std::to_string(mismatches) + " mismatches");
  for (const auto& [idx, limit] : {std::pair<std::size_t, Rational>{9, ratio(5, 100)}, {49, ratio(1, 100)}}) {
    const auto& row = rows[idx];
    c.check(off(row.vol_ratio) < limit, "alpha " + row.alpha.get_str() + ": |vol_ratio - 1| = " +
                                            off(row.vol_ratio).get_str() + " < " + limit.get_str());
    c.check(off(row.boundary_ratio) < limit, "alpha " + row.alpha.get_str() + ": |boundary_ratio - 1| = " +
                                                 off(row.boundary_ratio).get_str() + " < " + limit.get_str());
  }
  std::vector<Rational> twenty(alphas.begin(), alphas.begin() + 20);
  for (const char* name : {"linf:2", "tri"}) {
    const auto trend = convergence_experiment(builtin_graph(name).graph(), twenty);
    bool monotone = true;
    for (std::size_t i = 1; i < trend.size(); ++i) {
      monotone = monotone && off(trend[i].vol_ratio) <= off(trend[i - 1].vol_ratio) &&
                 off(trend[i].boundary_ratio) <= off(trend[i - 1].boundary_ratio);
    }
    c.check(monotone, std::string(name) + ": |ratio - 1| non-increasing over alpha = 1..20");
  }
  r.passed = c.all();
  return r;
}

inline CriterionResult criterion_pick() {
  CriterionResult r{11, "Pick area against polygon volume", false, {}, 0};
  detail::Checker c(r);
  std::mt19937_64 rng(11);
  std::size_t failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Polytope p = detail::random_lattice_polytope(rng, 2, 7);
    failures += pick_area(p).area != polytope_volume(p);
  }
  c.check(failures == 0, "100 random lattice polygons: " + std::to_string(failures) + " failures");
  const Polytope z2 = zonotope_polytope(detail::builtin_zonotope("linf:2"));
  const auto pick = pick_area(z2);
  c.check(pick.area == 28 && polytope_volume(z2) == 28 && pick.interior == 21 && pick.boundary == 16 &&
              pick.interior + pick.boundary == 37,
          "Z_2: area " + pick.area.get_str() + ", I = " + pick.interior.get_str() + ", B = " + pick.boundary.get_str());
  r.passed = c.all();
  return r;
}

inline const std::vector<std::function<CriterionResult()>>& criteria() {
  static const std::vector<std::function<CriterionResult()>> all{
      criterion_fvectors,         criterion_truncated_24_cell,   criterion_boundary_identity,
      criterion_projection_lattice, criterion_boundary_of_zonotope, criterion_brunn_minkowski,
      criterion_facets_and_sections, criterion_exhaustive_search,  criterion_limiting_shape,
      criterion_convergence,      criterion_pick};
  return all;
}

/// Runs criterion `id` (1-based), converting any exception into a failure.
inline CriterionResult run_criterion(int id) {
  if (id < 1 || id > static_cast<int>(criteria().size())) {
    throw Error(ErrorKind::InvalidArgument, "no acceptance criterion " + std::to_string(id));
  }
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = criteria()[static_cast<std::size_t>(id - 1)]();
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.passed = false;
    r.checks.push_back(std::string("FAIL exception: ") + e.what());
  }
  r.seconds = detail::seconds_since(t0);
  return r;
}

inline std::string summary_line(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.title + " (" +
         secs + " s)";
}

}  // namespace isozono::regression
