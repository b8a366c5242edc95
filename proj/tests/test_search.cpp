#include "isozono/catalog.hpp"
#include "isozono/search.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace isozono;
using namespace isozono::testing;

namespace {

PLGraph graph(const std::string& name) { return builtin_graph(name).graph(); }

struct BruteMinimum {
  std::int64_t boundary = -1;
  std::set<LatticeSet> witnesses;
};

// Every subset of the 2D box [-r, r]^2 that contains the origin as its
// lexicographically smallest point, as a bitmask over the points after it;
// boundary by counting each point's neighbours outside the set on a grid.
BruteMinimum brute_min_boundary_2d(const PLGraph& g, std::size_t m, int r) {
  std::vector<LatticePoint> after;
  for (int x = -r; x <= r; ++x) {
    for (int y = -r; y <= r; ++y) {
      if (x > 0 || (x == 0 && y > 0)) after.push_back({x, y});
    }
  }
  const int side = 2 * r + 1, pad = 2, width = side + 2 * pad;
  auto cell = [&](std::int64_t x, std::int64_t y) { return (x + r + pad) * width + (y + r + pad); };
  std::vector<char> grid(static_cast<std::size_t>(width * width), 0);

  BruteMinimum best;
  const std::size_t bits = after.size(), pick = m - 1;
  auto visit = [&](std::uint64_t mask) {
    std::vector<LatticePoint> s{{0, 0}};
    for (std::size_t b = 0; b < bits; ++b) {
      if (mask >> b & 1U) s.push_back(after[b]);
    }
    for (const auto& p : s) grid[cell(p[0], p[1])] = 1;
    std::int64_t boundary = 0;
    for (const auto& p : s) {
      for (const auto& v : g.generators()) {
        boundary += !grid[cell(p[0] + v[0], p[1] + v[1])];
        boundary += !grid[cell(p[0] - v[0], p[1] - v[1])];
      }
    }
    for (const auto& p : s) grid[cell(p[0], p[1])] = 0;
    if (best.boundary < 0 || boundary < best.boundary) {
      best.boundary = boundary;
      best.witnesses.clear();
    }
    if (boundary == best.boundary) best.witnesses.insert(LatticeSet(2, s));
  };
  if (pick == 0) {
    visit(0);
    return best;
  }
  // Gosper's hack over all masks with `pick` bits set.
  for (std::uint64_t mask = (std::uint64_t{1} << pick) - 1; mask < (std::uint64_t{1} << bits);) {
    visit(mask);
    const std::uint64_t c = mask & -mask, nxt = mask + c;
    mask = (((nxt ^ mask) >> 2) / c) | nxt;
  }
  return best;
}

LatticeSet box_set(std::int64_t s) {
  std::vector<LatticePoint> pts;
  for (std::int64_t x = 0; x < s; ++x) {
    for (std::int64_t y = 0; y < s; ++y) pts.push_back({x, y});
  }
  return LatticeSet(2, pts);
}

LatticeSet hexagon_b1() {
  return LatticeSet(2, {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
}

bool contains(const std::vector<LatticeSet>& sets, const LatticeSet& s) {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

}  // namespace

TEST(ExhaustiveSearch, SpecExamples) {
  auto linf = graph("linf:2");
  EXPECT_EQ(exhaustive_min_boundary(linf, 1, 3).min_boundary, 8);
  EXPECT_EQ(exhaustive_min_boundary(linf, 2, 3).min_boundary, 14);
  auto l1 = exhaustive_min_boundary(graph("l1:2"), 4, 3);
  EXPECT_EQ(l1.min_boundary, 8);
  EXPECT_TRUE(l1.exhaustive);
  EXPECT_EQ(l1.witnesses, std::vector<LatticeSet>{box_set(2)});
}

TEST(ExhaustiveSearch, LinfMatchesBruteForceUpToTen) {
  auto g = graph("linf:2");
  for (std::size_t m = 1; m <= 10; ++m) {
    auto res = exhaustive_min_boundary(g, m, 3);
    auto oracle = brute_min_boundary_2d(g, m, 3);
    EXPECT_EQ(res.min_boundary, oracle.boundary) << "m = " << m;
    EXPECT_EQ(res.witnesses, std::vector<LatticeSet>(oracle.witnesses.begin(), oracle.witnesses.end())) << "m = " << m;
    EXPECT_EQ(res.optimal_count, oracle.witnesses.size());
    EXPECT_FALSE(res.truncated);
    for (const auto& w : res.witnesses) {
      EXPECT_EQ(w.size(), m);
      EXPECT_EQ(edge_boundary_direct(g, w), res.min_boundary);
      EXPECT_EQ(w, w.canonical());
    }
  }
}

TEST(ExhaustiveSearch, OtherPlanarGraphsMatchBruteForce) {
  for (const char* name : {"l1:2", "tri"}) {
    auto g = graph(name);
    for (std::size_t m = 1; m <= 8; ++m) {
      auto res = exhaustive_min_boundary(g, m, 2);
      auto oracle = brute_min_boundary_2d(g, m, 2);
      EXPECT_EQ(res.min_boundary, oracle.boundary) << name << " m = " << m;
      EXPECT_EQ(res.witnesses.size(), oracle.witnesses.size()) << name << " m = " << m;
    }
  }
}

TEST(ExhaustiveSearch, SquaresAreOptimalInTheL1Plane) {
  auto g = graph("l1:2");
  for (std::int64_t s = 1; s <= 3; ++s) {
    auto res = exhaustive_min_boundary(g, static_cast<std::size_t>(s * s), 3);
    EXPECT_EQ(res.min_boundary, 4 * s);
    EXPECT_TRUE(contains(res.witnesses, box_set(s)));
  }
}

TEST(ExhaustiveSearch, TriangularHexagon) {
  auto g = graph("tri");
  auto res = exhaustive_min_boundary(g, 7, 2);
  EXPECT_EQ(res.min_boundary, 18);
  EXPECT_EQ(edge_boundary_direct(g, hexagon_b1()), 18);
  EXPECT_TRUE(contains(res.witnesses, hexagon_b1().canonical()));
}

TEST(ExhaustiveSearch, ThreadCountDoesNotChangeTheResult) {
  auto g = graph("linf:2");
  for (std::size_t m : {5U, 9U}) {
    SearchOptions one;
    one.threads = 1;
    SearchOptions many;
    many.threads = 7;
    EXPECT_EQ(exhaustive_min_boundary(g, m, 3, one), exhaustive_min_boundary(g, m, 3, many));
  }
}

TEST(ExhaustiveSearch, WitnessCapKeepsSmallestAndFlagsTruncation) {
  auto g = graph("linf:2");
  auto full = exhaustive_min_boundary(g, 10, 3);
  ASSERT_GT(full.witnesses.size(), 3U);
  SearchOptions opt;
  opt.witness_cap = 3;
  auto capped = exhaustive_min_boundary(g, 10, 3, opt);
  EXPECT_EQ(capped.min_boundary, full.min_boundary);
  EXPECT_EQ(capped.witnesses, std::vector<LatticeSet>(full.witnesses.begin(), full.witnesses.begin() + 3));
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.optimal_count, full.optimal_count);
}

TEST(ExhaustiveSearch, SymmetryQuotientPicksOneRepresentativePerOrbit) {
  auto spec = builtin_graph("linf:2");
  auto g = spec.graph();
  SearchOptions opt;
  opt.symmetries = spec.symmetry_hints;
  const auto group = detail::symmetry_closure(spec.symmetry_hints, 2);
  EXPECT_EQ(group.size(), 8U);  // the symmetries of the square
  for (std::size_t m : {2U, 3U, 5U, 10U}) {
    auto plain = exhaustive_min_boundary(g, m, 3);
    auto quotient = exhaustive_min_boundary(g, m, 3, opt);
    EXPECT_EQ(quotient.min_boundary, plain.min_boundary);
    // Orbits of the plain witnesses, computed here by brute force.
    std::set<std::set<LatticeSet>> orbits;
    for (const auto& w : plain.witnesses) {
      std::set<LatticeSet> orbit;
      for (const auto& s : group) {
        std::vector<LatticePoint> img;
        for (const auto& p : w.points()) img.push_back(apply(s, p));
        orbit.insert(LatticeSet(2, img).canonical());
      }
      orbits.insert(orbit);
    }
    EXPECT_EQ(quotient.witnesses.size(), orbits.size()) << "m = " << m;
    for (const auto& rep : quotient.witnesses) {
      std::size_t hits = 0;
      for (const auto& orbit : orbits) hits += orbit.count(rep);
      EXPECT_EQ(hits, 1U);
    }
  }
}

TEST(ExhaustiveSearch, ConnectedOptionOnlyReportsConnectedSets) {
  auto g = graph("l1:2");
  SearchOptions opt;
  opt.connected_only = true;
  auto res = exhaustive_min_boundary(g, 3, 2, opt);
  EXPECT_EQ(res.min_boundary, 8);
  for (const auto& w : res.witnesses) {
    EXPECT_EQ(edge_boundary_direct(g, w), 8);
    // Three points with boundary 8 in the square grid share two edges, so
    // they form a path.
  }
  // Disconnected sets are excluded even when nothing better exists.
  auto single = exhaustive_min_boundary(g, 2, 2, opt);
  EXPECT_EQ(single.min_boundary, 6);
}

TEST(ExhaustiveSearch, BudgetAndArgumentErrors) {
  auto g = graph("linf:2");
  SearchOptions opt;
  opt.budget = Integer(1000);
  EXPECT_ISOZONO_ERROR(exhaustive_min_boundary(g, 10, 3, opt), ErrorKind::BudgetExceeded);
  EXPECT_ISOZONO_ERROR(exhaustive_min_boundary(g, 0, 3), ErrorKind::InvalidArgument);
  EXPECT_ISOZONO_ERROR(exhaustive_min_boundary(g, 30, 1), ErrorKind::InvalidArgument);
}

TEST(ExhaustiveSearch, BudgetFromEnvironment) {
  ::setenv("ISOZONO_BUDGET", "10", 1);
  EXPECT_ISOZONO_ERROR(exhaustive_min_boundary(graph("linf:2"), 4, 3), ErrorKind::BudgetExceeded);
  ::setenv("ISOZONO_BUDGET", "many", 1);
  EXPECT_ISOZONO_ERROR(exhaustive_min_boundary(graph("linf:2"), 4, 3), ErrorKind::InvalidArgument);
  ::unsetenv("ISOZONO_BUDGET");
  EXPECT_EQ(exhaustive_min_boundary(graph("linf:2"), 4, 3).min_boundary, 20);
}

TEST(LocalSearch, SpecExamples) {
  for (std::uint64_t seed : {1U, 2U, 3U}) {
    EXPECT_LE(local_search_min_boundary(graph("linf:2"), 4, 2000, seed).min_boundary, 20);
    EXPECT_LE(local_search_min_boundary(graph("tri"), 7, 5000, seed).min_boundary, 18);
  }
  auto octagon = local_search_min_boundary(graph("linf:2"), 37, 200000, 1);
  EXPECT_LE(octagon.min_boundary, 64);
  EXPECT_FALSE(octagon.exhaustive);
}

TEST(LocalSearch, OctagonIsTheBestFoundSetAcrossSeeds) {
  auto g = graph("linf:2");
  const LatticeSet octagon = zonotope_point_set(g, Rational(1)).set.canonical();
  ASSERT_EQ(octagon.size(), 37U);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto res = local_search_min_boundary(g, 37, 200000, seed);
    EXPECT_EQ(res.min_boundary, 64) << "seed " << seed;
    EXPECT_TRUE(contains(res.witnesses, octagon)) << "seed " << seed;
  }
}

TEST(LocalSearch, DeterministicPerSeedAndNeverWorseThanWitnesses) {
  auto g = graph("linf:2");
  auto a = local_search_min_boundary(g, 15, 20000, 99);
  auto b = local_search_min_boundary(g, 15, 20000, 99);
  EXPECT_EQ(a, b);
  ASSERT_FALSE(a.witnesses.empty());
  for (const auto& w : a.witnesses) {
    EXPECT_EQ(w.size(), 15U);
    EXPECT_EQ(edge_boundary_direct(g, w), a.min_boundary);
  }
}

TEST(LocalSearch, AgreesWithExhaustiveOnPlanarGraphs) {
  for (const char* name : {"l1:2", "linf:2", "tri"}) {
    auto g = graph(name);
    for (std::size_t m = 1; m <= 10; ++m) {
      auto exact = exhaustive_min_boundary(g, m, 3);
      std::int64_t best = -1;
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto h = local_search_min_boundary(g, m, 20000, seed);
        best = best < 0 ? h.min_boundary : std::min(best, h.min_boundary);
      }
      EXPECT_EQ(best, exact.min_boundary) << name << " m = " << m;
    }
  }
}

TEST(ZonotopePointSet, SpecExamples) {
  auto l1 = zonotope_point_set(graph("l1:2"), Rational(1));
  EXPECT_EQ(l1.cardinality, 9U);
  EXPECT_EQ(l1.boundary, 12);
  auto linf = zonotope_point_set(graph("linf:2"), Rational(1));
  EXPECT_EQ(linf.cardinality, 37U);
  EXPECT_EQ(linf.boundary, 64);
  // Z(tri) is the hexagon with vertices (2,2), (0,2), (-2,0), ...: B_1 is its
  // half and the unit dilate already holds B_2.
  auto tri_half = zonotope_point_set(graph("tri"), Rational(1, 2));
  EXPECT_EQ(tri_half.set, hexagon_b1());
  EXPECT_EQ(tri_half.boundary, 18);
  auto tri = zonotope_point_set(graph("tri"), Rational(1));
  EXPECT_EQ(tri.cardinality, 19U);  // 1 + 3r(r+1) at r = 2
  EXPECT_EQ(tri.boundary, 30);
  EXPECT_ISOZONO_ERROR(zonotope_point_set(graph("tri"), Rational(0)), ErrorKind::InvalidArgument);
}

TEST(ZonotopePointSet, OctagonCountMatchesPolygonOracle) {
  auto g = graph("linf:2");
  const Polytope z = zonotope_polytope(build_zonotope(g));
  for (long a = 1; a <= 4; ++a) {
    std::vector<RationalVector> verts;
    for (const auto& v : z.vertices()) verts.push_back(scale(v, Rational(a)));
    auto [interior, boundary] = polygon_lattice_points(verts);
    EXPECT_EQ(static_cast<long>(zonotope_point_set(g, Rational(a)).cardinality), interior + boundary);
  }
}

TEST(Convergence, L1ClosedFormsForAlphaUpToFifty) {
  std::vector<Rational> alphas;
  for (long a = 1; a <= 50; ++a) alphas.emplace_back(a);
  auto rows = convergence_experiment(graph("l1:2"), alphas);
  ASSERT_EQ(rows.size(), 50U);
  for (long a = 1; a <= 50; ++a) {
    const auto& r = rows[static_cast<std::size_t>(a - 1)];
    EXPECT_EQ(r.points, (2 * a + 1) * (2 * a + 1));
    EXPECT_EQ(r.volume, 4 * a * a);
    EXPECT_EQ(r.discrete_boundary, 8 * a + 4);
    EXPECT_EQ(r.continuous_boundary, 8 * a);
    EXPECT_EQ(r.vol_ratio, r.volume / r.points);
    EXPECT_EQ(r.boundary_ratio, r.continuous_boundary / r.discrete_boundary);
  }
  EXPECT_EQ(rows[9].vol_ratio, Rational(400, 441));
  EXPECT_EQ(rows[9].boundary_ratio, Rational(20, 21));
  EXPECT_EQ(rows[49].vol_ratio, Rational(10000, 10201));
  auto off = [](const Rational& q) -> Rational { return abs(Rational(q - 1)); };
  // The boundary ratio is 2a/(2a+1): within 5% at a = 10 and 1% at a = 50.
  // The volume ratio (2a)^2/(2a+1)^2 converges only like 1 - 1/a.
  EXPECT_LT(off(rows[9].boundary_ratio), ratio(5, 100));
  EXPECT_LT(off(rows[49].boundary_ratio), Rational(1, 100));
  EXPECT_EQ(off(rows[9].vol_ratio), Rational(41, 441));
  EXPECT_EQ(off(rows[49].vol_ratio), Rational(201, 10201));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(off(rows[i].vol_ratio), off(rows[i - 1].vol_ratio));
    EXPECT_LE(off(rows[i].boundary_ratio), off(rows[i - 1].boundary_ratio));
  }
}

TEST(Convergence, LinfAndTriangularTrendTowardOne) {
  std::vector<Rational> alphas;
  for (long a = 1; a <= 20; ++a) alphas.emplace_back(a);
  for (const char* name : {"linf:2", "tri"}) {
    auto rows = convergence_experiment(graph(name), alphas);
    auto off = [](const Rational& q) -> Rational { return abs(Rational(q - 1)); };
    for (std::size_t i = 1; i < rows.size(); ++i) {
      EXPECT_LE(off(rows[i].vol_ratio), off(rows[i - 1].vol_ratio)) << name << " alpha " << rows[i].alpha;
      EXPECT_LE(off(rows[i].boundary_ratio), off(rows[i - 1].boundary_ratio)) << name << " alpha " << rows[i].alpha;
    }
    // Integer dilates of Z_2 have no gaps, so the discrete count is
    // 2 * sum(projections) with projection counts 2a*h + 1 per direction.
    if (std::string(name) == "linf:2") {
      for (const auto& r : rows) {
        const long a = r.alpha.get_num().get_si();
        EXPECT_EQ(r.discrete_boundary, 2 * (2 * (6 * a + 1) + 2 * (8 * a + 1)));
      }
    }
  }
}

TEST(Convergence, Preconditions) {
  auto g = graph("l1:2");
  EXPECT_ISOZONO_ERROR(convergence_experiment(g, {Rational(2), Rational(1)}), ErrorKind::InvalidArgument);
  EXPECT_ISOZONO_ERROR(convergence_experiment(g, {Rational(0)}), ErrorKind::InvalidArgument);
  EXPECT_ISOZONO_ERROR(convergence_experiment(g, {Rational(1, 3)}), ErrorKind::InvalidArgument);
  EXPECT_ISOZONO_ERROR(convergence_experiment(g, {Rational(1000)}, Integer(100000)), ErrorKind::BudgetExceeded);
}

TEST(LimitingShape, SpecExamples) {
  auto linf = limiting_shape_report(graph("linf:2"), 1, 3);
  ASSERT_EQ(linf.size(), 1U);
  EXPECT_TRUE(linf[0].family_exists);
  EXPECT_TRUE(linf[0].matches);

  auto l1 = limiting_shape_report(graph("l1:2"), 5, 3);
  ASSERT_EQ(l1.size(), 5U);
  EXPECT_TRUE(l1[3].family_exists);
  EXPECT_TRUE(l1[3].matches);
  EXPECT_FALSE(l1[4].family_exists);
  EXPECT_FALSE(l1[4].matches);
  EXPECT_EQ(l1[4].nearest_below, 4U);
  EXPECT_EQ(l1[4].nearest_above, 6U);  // the 2x3 box from t = (1/2, 0)
  EXPECT_EQ(l1[3].hull_facets, std::vector<std::size_t>{4});
}

TEST(LimitingShape, FamilyMembersAreGaugeSublevelSets) {
  // Independent membership test: x ∈ alpha Z + t iff |x_k - t_k| <= alpha
  // for the L1 square, so family sizes are products of 2 floor(alpha)+1 and
  // 2 floor(alpha + 1/2).
  std::set<std::size_t> expected;
  for (long twice_a = 1; twice_a <= 12; ++twice_a) {
    const Rational a(twice_a, 2);
    const long odd = 2 * floor_of(a).get_si() + 1, even = 2 * floor_of(a + Rational(1, 2)).get_si();
    for (long u : {odd, even}) {
      for (long v : {odd, even}) {
        if (u * v <= 30) expected.insert(static_cast<std::size_t>(u * v));
      }
    }
  }
  std::set<std::size_t> got;
  for (const auto& f : zonotope_family(graph("l1:2"), 30)) got.insert(f.set.size());
  EXPECT_EQ(got, expected);
}

TEST(LimitingShape, OctagonHasEightSupportingDirections) {
  auto g = graph("linf:2");
  auto res = local_search_min_boundary(g, 37, 200000, 3);
  ASSERT_FALSE(res.witnesses.empty());
  auto analysis = shape_analysis(g, res.witnesses.front());
  EXPECT_EQ(analysis.hull_facets, 8U);
  ASSERT_TRUE(analysis.family_match.has_value());
  EXPECT_EQ(analysis.family_match->alpha, 1);
}

TEST(Reports, TabSeparatedHeaders) {
  auto rows = convergence_experiment(graph("l1:2"), {Rational(10)});
  EXPECT_EQ(convergence_report_tsv(rows),
            "alpha\tpoints\tvolume\tdiscrete_boundary\tcontinuous_boundary\tvol_ratio\tboundary_ratio\n"
            "10\t441\t400\t84\t80\t400/441\t20/21\n");
  auto res = exhaustive_min_boundary(graph("l1:2"), 4, 2);
  EXPECT_EQ(search_report_tsv(res),
            "cardinality\tmin_boundary\texhaustive\toptimal_count\twitnesses_reported\n4\t8\ttrue\t1\t1\n");
}
