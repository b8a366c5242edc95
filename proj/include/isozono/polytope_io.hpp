#pragma once

#include "isozono/linalg.hpp"
#include "isozono/polytope.hpp"
#include "isozono/text_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isozono {

// Format:
//   dim n
//   V            (vertex rows, rationals as p/q)
//   H            (rows "a_1 ... a_n <= c"; optional)
//   E            (rows "a_1 ... a_n = c"; affine hull, lower-dimensional only)
// "≤" is accepted in place of "<=".

inline std::string write_polytope(const Polytope& p) {
  std::string out = "dim " + std::to_string(p.dim()) + "\n";
  if (p.has_vertices()) {
    out += "V\n";
    for (const auto& v : p.vertices()) out += io::join(v) + "\n";
  }
  if (p.has_facets()) {
    out += "H\n";
    for (const auto& f : p.facets()) out += io::join(f.normal) + " <= " + format_rational(f.offset) + "\n";
  }
  if (!p.equalities().empty()) {
    out += "E\n";
    for (const auto& e : p.equalities()) out += io::join(e.normal) + " = " + format_rational(e.offset) + "\n";
  }
  return out;
}

inline Polytope read_polytope(const std::string& text) {
  io::LineReader in(text);
  std::vector<std::string> tok;
  if (!in.next(tok) || tok.size() != 2 || tok[0] != "dim") in.fail("expected 'dim n'");
  const std::size_t n = in.count(tok[1]);

  std::optional<std::vector<RationalVector>> verts;
  std::optional<std::vector<Facet>> facets;
  std::vector<Facet> eqs;
  char block = 0;
  while (in.next(tok)) {
    if (tok.size() == 1 && (tok[0] == "V" || tok[0] == "H" || tok[0] == "E")) {
      block = tok[0][0];
      if (block == 'V') verts.emplace();
      if (block == 'H') facets.emplace();
      continue;
    }
    if (block == 'V') {
      if (tok.size() != n) in.fail("vertex row needs " + std::to_string(n) + " entries");
      RationalVector v;
      for (const auto& t : tok) v.push_back(in.rational(t));
      verts->push_back(std::move(v));
    } else if (block == 'H' || block == 'E') {
      const std::string rel = block == 'H' ? "<=" : "=";
      if (tok.size() != n + 2 || (tok[n] != rel && !(block == 'H' && tok[n] == "≤"))) {
        in.fail("expected 'a_1 ... a_" + std::to_string(n) + " " + rel + " c'");
      }
      RationalVector a;
      for (std::size_t k = 0; k < n; ++k) a.push_back(in.rational(tok[k]));
      if (is_zero(a)) in.fail("zero normal");
      Facet f = make_facet(a, in.rational(tok[n + 1]));
      if (block == 'E' && f.normal[leading_index(f.normal)] < 0) {
        for (auto& x : f.normal) x = -x;
        f.offset = -f.offset;
      }
      (block == 'H' ? *facets : eqs).push_back(std::move(f));
    } else {
      in.fail("data before a V/H/E header");
    }
  }
  if (!verts && !facets) in.fail("polytope has neither V nor H block");
  std::size_t affine = n;
  if (verts) {
    if (verts->empty()) in.fail("empty V block");
    affine = static_cast<std::size_t>(linalg::affine_dimension(*verts));
  } else {
    linalg::IntMatrix m;
    for (const auto& e : eqs) m.push_back(e.normal);
    affine = n - linalg::rank(m);
  }
  if (affine < n && eqs.empty() && verts) eqs = detail::affine_equations(*verts);
  return Polytope(n, affine, std::move(verts), std::move(facets), std::move(eqs));
}

}  // namespace isozono
