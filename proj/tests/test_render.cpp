#include "isozono/catalog.hpp"
#include "isozono/render.hpp"
#include "isozono/zonotope.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <regex>
#include <sstream>

using namespace isozono;
using namespace isozono::testing;

namespace {

Polytope zpoly(const std::string& name) { return zonotope_polytope(build_zonotope(builtin_graph(name).graph())); }

std::vector<std::pair<double, double>> svg_points(const std::string& svg) {
  std::smatch m;
  EXPECT_TRUE(std::regex_search(svg, m, std::regex("points=\"([^\"]*)\"")));
  std::vector<std::pair<double, double>> out;
  std::istringstream in(m[1].str());
  std::string pair;
  while (in >> pair) {
    auto comma = pair.find(',');
    out.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
  }
  return out;
}

struct Off {
  std::vector<std::vector<double>> verts;
  std::vector<std::vector<std::size_t>> faces;
  std::size_t edges = 0;
};

Off parse_off(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  in >> magic;
  EXPECT_EQ(magic, "OFF");
  Off off;
  std::size_t nv = 0, nf = 0;
  in >> nv >> nf >> off.edges;
  off.verts.assign(nv, std::vector<double>(3));
  for (auto& v : off.verts) in >> v[0] >> v[1] >> v[2];
  for (std::size_t f = 0; f < nf; ++f) {
    std::size_t k = 0;
    in >> k;
    std::vector<std::size_t> face(k);
    for (auto& i : face) in >> i;
    off.faces.push_back(face);
  }
  return off;
}

}  // namespace

TEST(Decimal, TwelveSignificantDigits) {
  EXPECT_EQ(decimal12(Rational(1, 3)), "0.333333333333");
  EXPECT_EQ(decimal12(Rational(-7, 2)), "-3.5");
  EXPECT_EQ(decimal12(Rational(0)), "0");
  EXPECT_EQ(decimal12(Rational(123456789, 1)), "123456789");
}

TEST(RenderSvg, SquareAndOctagon) {
  auto square = svg_points(render(convex_hull(box_vertices(2, -1, 1))));
  EXPECT_EQ(square.size(), 4U);
  auto octagon = svg_points(render(zpoly("linf:2")));
  ASSERT_EQ(octagon.size(), 8U);
  // Cyclic order: consecutive turns all have the same sign (y is flipped).
  for (std::size_t i = 0; i < octagon.size(); ++i) {
    const auto& a = octagon[i];
    const auto& b = octagon[(i + 1) % 8];
    const auto& c = octagon[(i + 2) % 8];
    const double turn = (b.first - a.first) * (c.second - b.second) - (b.second - a.second) * (c.first - b.first);
    EXPECT_LT(turn, 0);
  }
}

TEST(RenderSvg, Deterministic) {
  EXPECT_EQ(render(zpoly("tri")), render(zpoly("tri")));
}

TEST(RenderOff, CubeAndZ3) {
  auto cube = parse_off(render(convex_hull(box_vertices(3, 0, 1))));
  EXPECT_EQ(cube.verts.size(), 8U);
  EXPECT_EQ(cube.faces.size(), 6U);
  EXPECT_EQ(cube.edges, 12U);

  auto z3 = parse_off(render(zpoly("linf:3")));
  EXPECT_EQ(z3.verts.size(), 96U);
  EXPECT_EQ(z3.faces.size(), 50U);
  EXPECT_EQ(z3.edges, 144U);
}

TEST(RenderOff, FacesAreOutwardPlanarCycles) {
  for (const char* name : {"linf:3", "l1:3"}) {
    auto off = parse_off(render(zpoly(name)));
    std::vector<double> centre(3, 0.0);
    for (const auto& v : off.verts) {
      for (int k = 0; k < 3; ++k) centre[k] += v[k] / static_cast<double>(off.verts.size());
    }
    // Every edge of a closed oriented surface is used once in each direction.
    std::map<std::pair<std::size_t, std::size_t>, int> directed;
    for (const auto& face : off.faces) {
      ASSERT_GE(face.size(), 3U);
      // Newell normal against the direction from the centre to the face.
      double nx = 0, ny = 0, nz = 0, cx = 0, cy = 0, cz = 0;
      for (std::size_t i = 0; i < face.size(); ++i) {
        const auto& a = off.verts[face[i]];
        const auto& b = off.verts[face[(i + 1) % face.size()]];
        nx += (a[1] - b[1]) * (a[2] + b[2]);
        ny += (a[2] - b[2]) * (a[0] + b[0]);
        nz += (a[0] - b[0]) * (a[1] + b[1]);
        cx += a[0];
        cy += a[1];
        cz += a[2];
        directed[{face[i], face[(i + 1) % face.size()]}] += 1;
      }
      const double k = static_cast<double>(face.size());
      EXPECT_GT(nx * (cx / k - centre[0]) + ny * (cy / k - centre[1]) + nz * (cz / k - centre[2]), 0) << name;
    }
    for (const auto& [edge, count] : directed) {
      EXPECT_EQ(count, 1);
      EXPECT_EQ(directed.count({edge.second, edge.first}), 1U);
    }
  }
}

TEST(Render, RejectsOtherDimensions) {
  EXPECT_ISOZONO_ERROR(render(convex_hull(box_vertices(4, 0, 1))), ErrorKind::InvalidArgument);
  EXPECT_ISOZONO_ERROR(render(convex_hull({rv({0}), rv({1})})), ErrorKind::InvalidArgument);
  EXPECT_ISOZONO_ERROR(render(convex_hull({rv({0, 0}), rv({1, 1})})), ErrorKind::InvalidArgument);
}
