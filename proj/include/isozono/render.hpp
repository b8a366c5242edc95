#pragma once

#include "isozono/number.hpp"
#include "isozono/polytope.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace isozono {

/// Decimal string with 12 significant digits, for figure files only.
inline std::string decimal12(const Rational& q) {
  char buf[64];
  const double d = q.get_d();
  std::snprintf(buf, sizeof buf, "%.12g", d == 0 ? 0.0 : d);
  return buf;
}

namespace detail {

inline Rational cross2(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Convex polygon vertices in counter-clockwise order, starting from the
/// lexicographically smallest.
inline std::vector<RationalVector> ccw_cycle(std::vector<RationalVector> pts) {
  if (pts.size() < 3) return pts;
  std::sort(pts.begin(), pts.end(), LexLess<Rational>{});
  const RationalVector o = pts.front();
  std::sort(pts.begin() + 1, pts.end(), [&](const RationalVector& a, const RationalVector& b) {
    // Every other vertex lies in the half-plane x >= o.x, so the turn
    // direction is a strict angular order.
    return cross2(o, a, b) > 0;
  });
  return pts;
}

/// Drop the coordinate where the normal is largest, keeping the remaining two.
inline RationalVector facet_chart(const RationalVector& x, std::size_t drop) {
  RationalVector y;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k != drop) y.push_back(x[k]);
  }
  return y;
}

}  // namespace detail

/// SVG with one polygon, vertices in cyclic order, y axis pointing up.
inline std::string render_svg(const Polytope& p) {
  if (p.dim() != 2 || !p.full_dimensional()) {
    throw Error(ErrorKind::InvalidArgument, "render_svg: need a full-dimensional polygon");
  }
  const auto cycle = detail::ccw_cycle(p.vertices());
  Rational lo_x = cycle[0][0], hi_x = lo_x, lo_y = cycle[0][1], hi_y = lo_y;
  for (const auto& v : cycle) {
    lo_x = std::min(lo_x, v[0]);
    hi_x = std::max(hi_x, v[0]);
    lo_y = std::min(lo_y, v[1]);
    hi_y = std::max(hi_y, v[1]);
  }
  const Rational margin = std::max(Rational(hi_x - lo_x), Rational(hi_y - lo_y)) / 20;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << decimal12(lo_x - margin) << ' '
     << decimal12(-hi_y - margin) << ' ' << decimal12(hi_x - lo_x + 2 * margin) << ' '
     << decimal12(hi_y - lo_y + 2 * margin) << "\">\n";
  os << "  <polygon fill=\"#cfe0f3\" stroke=\"#1f3b5c\" stroke-width=\"" << decimal12(margin / 4)
     << "\" points=\"";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    os << (i ? " " : "") << decimal12(cycle[i][0]) << ',' << decimal12(-cycle[i][1]);
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

/// OFF with one face per facet, vertices ordered counter-clockwise when seen
/// from outside.
inline std::string render_off(const Polytope& p) {
  if (p.dim() != 3 || !p.full_dimensional()) {
    throw Error(ErrorKind::InvalidArgument, "render_off: need a full-dimensional 3-polytope");
  }
  const Polytope q = complete(p);
  const auto& verts = q.vertices();
  std::vector<std::vector<std::size_t>> faces;
  std::size_t edges = 0;
  for (const auto& f : q.facets()) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (dot(f.normal, verts[i]) == f.offset) on.push_back(i);
    }
    std::size_t drop = 0;
    for (std::size_t k = 1; k < 3; ++k) {
      if (abs(f.normal[k]) > abs(f.normal[drop])) drop = k;
    }
    std::vector<RationalVector> chart;
    for (auto i : on) chart.push_back(detail::facet_chart(verts[i], drop));
    auto cycle = detail::ccw_cycle(chart);
    std::vector<std::size_t> face;
    for (const auto& c : cycle) {
      for (auto i : on) {
        if (detail::facet_chart(verts[i], drop) == c) {
          face.push_back(i);
          break;
        }
      }
    }
    // The chart drops axis `drop`; (e_a, e_b) with a < b is positively
    // oriented against e_drop exactly when drop is 0 or 2.
    const bool flip = (f.normal[drop] > 0) != (drop != 1);
    if (flip) std::reverse(face.begin() + 1, face.end());
    edges += face.size();
    faces.push_back(std::move(face));
  }
  std::ostringstream os;
  os << "OFF\n" << verts.size() << ' ' << faces.size() << ' ' << edges / 2 << '\n';
  for (const auto& v : verts) os << decimal12(v[0]) << ' ' << decimal12(v[1]) << ' ' << decimal12(v[2]) << '\n';
  for (const auto& face : faces) {
    os << face.size();
    for (auto i : face) os << ' ' << i;
    os << '\n';
  }
  return os.str();
}

/// SVG for dimension 2, OFF for dimension 3.
inline std::string render(const Polytope& p) {
  if (p.dim() == 2) return render_svg(p);
  if (p.dim() == 3) return render_off(p);
  throw Error(ErrorKind::InvalidArgument, "render: unsupported dimension " + std::to_string(p.dim()));
}

inline void render_to_file(const Polytope& p, const std::string& path) {
  const std::string text = render(p);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "render: cannot open " + path);
  out << text;
}

}  // namespace isozono
