#include "isozono/catalog.hpp"
#include "isozono/zonotope.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace isozono;
using namespace isozono::testing;

namespace {

Zonotope zono(const std::string& name) { return build_zonotope(builtin_graph(name).graph()); }

Zonotope zc() { return build_zonotope_from_segments(4, d4_edge_vectors()); }

// All 2^k sums of +-v_i, deduplicated.
std::set<LatticePoint> sign_sums(const std::vector<LatticePoint>& gens) {
  std::set<LatticePoint> sums{LatticePoint(gens.front().size(), 0)};
  for (const auto& v : gens) {
    std::set<LatticePoint> next;
    for (const auto& s : sums) {
      next.insert(add(s, v));
      next.insert(sub(s, v));
    }
    sums = std::move(next);
  }
  return sums;
}

std::vector<RationalVector> brute_vertices_2d(const std::vector<LatticePoint>& gens) {
  std::vector<P2> pts;
  for (const auto& s : sign_sums(gens)) pts.emplace_back(Rational(static_cast<long>(s[0])), Rational(static_cast<long>(s[1])));
  return hull2d(pts);
}

// Section {x_axis = level} of conv(sign sums) in 3D, by intersecting every
// segment between points on opposite sides (or on the plane).
std::vector<RationalVector> brute_section_3d(const std::vector<LatticePoint>& gens, std::size_t axis, long level) {
  auto sums = sign_sums(gens);
  std::vector<LatticePoint> pts(sums.begin(), sums.end());
  std::vector<P2> cut;
  auto chart = [&](const RationalVector& x) {
    RationalVector y;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != axis) y.push_back(x[k]);
    }
    return P2{y[0], y[1]};
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const long a = pts[i][axis] - level;
    if (a == 0) cut.push_back(chart(to_rational(std::span<const std::int64_t>(pts[i]))));
    if (a <= 0) continue;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const long b = pts[j][axis] - level;
      if (b >= 0) continue;
      Rational t(a, a - b);
      t.canonicalize();
      RationalVector x(3);
      for (std::size_t k = 0; k < 3; ++k) x[k] = Rational(static_cast<long>(pts[i][k])) + t * (pts[j][k] - pts[i][k]);
      cut.push_back(chart(x));
    }
  }
  return hull2d(cut);
}

// Support of the one-sided segment sum sum_w [0, w].
Rational one_sided_support(const std::vector<LatticePoint>& segs, const IntVector& u) {
  Integer h(0);
  for (const auto& w : segs) {
    Integer d = dot(to_integer(std::span<const std::int64_t>(w)), u);
    if (d > 0) h += d;
  }
  return Rational(h);
}

std::vector<RationalVector> zc_vertex_oracle() {
  std::vector<RationalVector> out;
  std::vector<long> base{0, 2, 4, 6};
  do {
    for (int mask = 0; mask < 16; ++mask) {
      RationalVector v;
      for (int k = 0; k < 4; ++k) v.emplace_back((mask >> k) & 1 ? -base[k] : base[k]);
      out.push_back(v);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  sort_unique(out);
  return out;
}

}  // namespace

TEST(BuildZonotope, FromGraphsAndSegments) {
  EXPECT_EQ(zono("l1:2").generators().size(), 2U);
  EXPECT_EQ(zono("linf:3").generators().size(), 13U);
  auto c = zc();
  EXPECT_EQ(c.dim(), 4U);
  EXPECT_EQ(c.generators().size(), 12U);
  for (const auto& v : c.generators()) EXPECT_EQ(sign_canonical(v), v);
}

TEST(BuildZonotope, SegmentErrors) {
  EXPECT_ISOZONO_ERROR(build_zonotope_from_segments(2, {{1, 0}, {-1, 0}, {0, 1}}), ErrorKind::InvalidArgument);
  EXPECT_ISOZONO_ERROR(build_zonotope_from_segments(2, {{1, 0}, {-1, 0}, {1, 0}}), ErrorKind::DuplicateGenerator);
  EXPECT_ISOZONO_ERROR(build_zonotope_from_segments(2, {{2, 0}, {-2, 0}}), ErrorKind::NonPrimitive);
  EXPECT_ISOZONO_ERROR(build_zonotope_from_segments(2, {{1, 1}, {-1, -1}}), ErrorKind::RankDeficient);
  EXPECT_ISOZONO_ERROR(build_zonotope(2, {{1, 0}}), ErrorKind::RankDeficient);
}

TEST(ZonotopeVolume, SpecExamples) {
  EXPECT_EQ(zonotope_volume(zono("l1:2")), 4);
  EXPECT_EQ(zonotope_volume(zono("linf:2")), 28);
  EXPECT_EQ(zonotope_volume(zono("tri")), 12);
  for (const auto& name : {"linf:2", "tri", "l1:2"}) {
    EXPECT_EQ(zonotope_volume(zono(name)), shoelace_area(brute_vertices_2d(zono(name).generators()))) << name;
  }
}

TEST(ZonotopeHrep, SquareAndOctagon) {
  auto sq = zonotope_hrep(zono("l1:2"));
  std::vector<Facet> expect{{iv({-1, 0}), 1}, {iv({0, -1}), 1}, {iv({0, 1}), 1}, {iv({1, 0}), 1}};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(sq.facets(), expect);

  auto oct = zonotope_hrep(zono("linf:2"));
  ASSERT_EQ(oct.facets().size(), 8U);
  for (const auto& f : oct.facets()) {
    const Integer l1 = abs(f.normal[0]) + abs(f.normal[1]);
    EXPECT_EQ(f.offset, l1 == 1 ? 3 : 4);
  }
}

TEST(ZonotopeHrep, CrossPolytopeTessellationStructure) {
  auto segs = d4_edge_vectors();
  auto h = zonotope_hrep(zc());
  ASSERT_EQ(h.facets().size(), 48U);
  std::size_t axis = 0, pair = 0, diag = 0;
  for (const auto& f : h.facets()) {
    std::size_t nonzero = 0;
    bool units = true;
    for (const auto& x : f.normal) {
      nonzero += x != 0;
      units = units && abs(x) <= 1;
    }
    ASSERT_TRUE(units);
    axis += nonzero == 1;
    pair += nonzero == 2;
    diag += nonzero == 4;
    EXPECT_EQ(f.offset, one_sided_support(segs, f.normal));
  }
  EXPECT_EQ(axis, 8U);
  EXPECT_EQ(pair, 24U);
  EXPECT_EQ(diag, 16U);
}

TEST(ZonotopeVertices, TwoDimensionalAgainstBruteForce) {
  for (const auto& name : {"l1:2", "linf:2", "tri"}) {
    auto z = zono(name);
    EXPECT_EQ(zonotope_vertices(z).vertices(), brute_vertices_2d(z.generators())) << name;
  }
  EXPECT_EQ(zonotope_vertices(zono("linf:2")).vertices(),
            points({{-3, -1}, {-3, 1}, {-1, -3}, {-1, 3}, {1, -3}, {1, 3}, {3, -1}, {3, 1}}));
}

TEST(ZonotopeVertices, CrossPolytopeTessellationOrbit) {
  EXPECT_EQ(zonotope_vertices(zc()).vertices(), zc_vertex_oracle());
}

TEST(ZonotopeProperties, SymmetrySupportVolumeEuler) {
  std::vector<std::pair<std::string, Zonotope>> cases;
  for (const auto& name : {"l1:1", "l1:2", "l1:3", "linf:1", "linf:2", "linf:3", "tri"}) cases.emplace_back(name, zono(name));
  cases.emplace_back("zc", zc());
  for (const auto& [name, z] : cases) {
    auto p = zonotope_polytope(z);
    std::set<RationalVector> verts(p.vertices().begin(), p.vertices().end());
    for (const auto& v : p.vertices()) EXPECT_TRUE(verts.count(negate(v))) << name;
    for (const auto& v : p.vertices()) {
      std::size_t tight = 0;
      for (const auto& f : p.facets()) {
        ASSERT_EQ(f.offset, support(z, f.normal));
        ASSERT_LE(dot(f.normal, v), f.offset);
        tight += dot(f.normal, v) == f.offset;
      }
      EXPECT_GE(tight, z.dim()) << name;
    }
    EXPECT_EQ(polytope_volume(p), zonotope_volume(z)) << name;
    EXPECT_TRUE(f_vector(p).euler_holds()) << name;
  }
}

TEST(FVector, LowDimensionalLinf) {
  EXPECT_EQ(f_vector(zono("linf:2")).counts, (std::vector<std::size_t>{8, 8}));
  EXPECT_EQ(f_vector(zono("linf:3")).counts, (std::vector<std::size_t>{96, 144, 50}));
  EXPECT_EQ(f_vector(zc()).counts, (std::vector<std::size_t>{192, 384, 240, 48}));
  EXPECT_EQ(f_vector(zono("l1:3")).counts, (std::vector<std::size_t>{8, 12, 6}));
}

TEST(FVector, D4ChartMatchesOriginalCoordinates) {
  EXPECT_EQ(f_vector(zono("d4cross")), f_vector(zc()));
}

TEST(FacetPolytope, SpecExamples) {
  auto sq = facet_polytope(zono("l1:2"), 0);
  EXPECT_TRUE(sq.is_facet);
  EXPECT_EQ(sq.level, 1);
  EXPECT_EQ(sq.face.vertices(), points({{-1}, {1}}));

  auto z3 = facet_polytope(zono("linf:3"), 0);
  EXPECT_TRUE(z3.is_facet);
  EXPECT_EQ(z3.level, 9);
  EXPECT_EQ(z3.translation, rv({9, 0, 0}));
  auto h = homothety_check(zonotope_polytope(zono("linf:2")), z3.face);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->scale, 1);

  auto c = facet_polytope(zc(), 0);
  EXPECT_TRUE(c.is_facet);
  EXPECT_EQ(c.level, one_sided_support(d4_edge_vectors(), iv({1, 0, 0, 0})));
  EXPECT_EQ(c.face.vertices().size(), 24U);
  EXPECT_ISOZONO_ERROR(facet_polytope(zono("l1:2"), 2), ErrorKind::InvalidArgument);
}

TEST(FacetPolytope, LowerDimensionalFaceIsReported) {
  // e_1 is not a facet normal of the hexagon-like zonotope of (1,1),(1,-1).
  auto z = build_zonotope(2, {{1, 1}, {1, -1}});
  auto f = facet_polytope(z, 0);
  EXPECT_FALSE(f.is_facet);
  EXPECT_EQ(f.level, 2);
  EXPECT_EQ(f.face.vertices(), points({{0}}));
}

TEST(HyperplaneSection, SpecExamples) {
  auto z3 = zono("linf:3");
  auto center = hyperplane_section(z3, 0, 0);
  EXPECT_EQ(center.vertices(), points({{-9, -3}, {-9, 3}, {-3, -9}, {-3, 9}, {3, -9}, {3, 9}, {9, -3}, {9, 3}}));
  EXPECT_EQ(center.vertices(), brute_section_3d(z3.generators(), 0, 0));

  auto off = hyperplane_section(z3, 0, 3);
  EXPECT_EQ(off.vertices(), brute_section_3d(z3.generators(), 0, 3));
  EXPECT_NE(off.vertices().size(), 8U);

  auto sq = hyperplane_section(zono("l1:2"), 0, 0);
  EXPECT_EQ(sq.vertices(), points({{-1}, {1}}));
  EXPECT_ISOZONO_ERROR(hyperplane_section(z3, 0, 10), ErrorKind::EmptySection);

  auto top = hyperplane_section(z3, 0, 9);
  EXPECT_EQ(top.vertices().size(), 8U);
}

TEST(HyperplaneSection, AllLevelsAgreeWithBruteForce) {
  auto z3 = zono("linf:3");
  for (long level = -9; level <= 9; ++level) {
    EXPECT_EQ(hyperplane_section(z3, 1, level).vertices(), brute_section_3d(z3.generators(), 1, level)) << level;
  }
}

TEST(Homothety, SpecExamples) {
  auto p = convex_hull(points({{0, 0}, {2, 0}, {1, 3}}));
  std::vector<RationalVector> moved;
  for (const auto& v : p.vertices()) moved.push_back(add(scale(v, Rational(3)), rv({1, 2})));
  auto h = homothety_check(p, convex_hull(moved));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->scale, 3);
  EXPECT_EQ(h->translation, rv({1, 2}));

  auto oct = zonotope_polytope(zono("linf:2"));
  EXPECT_FALSE(homothety_check(oct, zonotope_polytope(zono("l1:2"))).has_value());
  auto c = homothety_check(oct, hyperplane_section(zono("linf:3"), 0, 0));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->scale, 3);
  EXPECT_EQ(c->translation, rv({0, 0}));

  // Same vertex count, not homothetic (reflected triangle).
  EXPECT_FALSE(homothety_check(p, convex_hull(points({{0, 0}, {2, 0}, {1, -3}}))).has_value());
  EXPECT_ISOZONO_ERROR(homothety_check(p, zonotope_polytope(zono("l1:3"))), ErrorKind::DimensionMismatch);
}

TEST(Proposition, FacetsAndCentralSections) {
  for (std::size_t n : {2U, 3U}) {
    auto zn = zono("linf:" + std::to_string(n));
    auto lower = zonotope_polytope(zono("linf:" + std::to_string(n - 1)));
    for (std::size_t axis = 0; axis < n; ++axis) {
      auto face = homothety_check(lower, facet_polytope(zn, axis).face);
      ASSERT_TRUE(face.has_value());
      EXPECT_EQ(face->scale, 1);
      auto section = homothety_check(lower, hyperplane_section(zn, axis, 0));
      ASSERT_TRUE(section.has_value());
      EXPECT_EQ(section->scale, 3);
    }
  }
}

TEST(ZonotopeFormat, RoundTrip) {
  for (const auto& name : builtin_graph_names()) {
    auto z = zono(name);
    auto text = write_zonotope(z);
    EXPECT_EQ(read_zonotope(text), z);
    EXPECT_EQ(write_zonotope(read_zonotope(text)), text);
  }
  EXPECT_ISOZONO_ERROR(read_zonotope("dim 2\n1 0\n0\n"), ErrorKind::Parse);
}
