#pragma once

#include "isozono/linalg.hpp"
#include "isozono/number.hpp"
#include "isozono/pl_graph.hpp"
#include "isozono/text_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace isozono {

/// Signed coordinate permutation: y_i = sign(s_i) * x_{|s_i|} with 1-based |s_i|.
using SignedPermutation = std::vector<int>;

inline LatticePoint apply(const SignedPermutation& s, const LatticePoint& x) {
  LatticePoint y(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto src = static_cast<std::size_t>(std::abs(s[i]) - 1);
    y[i] = s[i] < 0 ? -x[src] : x[src];
  }
  return y;
}

struct GraphSpec {
  std::string name;
  std::size_t dim = 0;
  std::vector<LatticePoint> generators;
  std::vector<SignedPermutation> symmetry_hints;
  // Lattice basis (rows, original coordinates) whose integer coordinates
  // the generators are written in; empty means the standard basis.
  std::vector<LatticePoint> basis;
  // One-sided edge segments [0, w] in original coordinates, when the
  // zonotope should be reported there (d4cross).
  std::vector<LatticePoint> original_segments;

  PLGraph graph() const { return validate_pl_graph(dim, generators); }

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

inline void validate_symmetry(const GraphSpec& spec, const SignedPermutation& s) {
  if (s.size() != spec.dim) throw Error(ErrorKind::DimensionMismatch, "symmetry hint has wrong length");
  std::vector<bool> seen(spec.dim, false);
  for (int v : s) {
    const int a = std::abs(v);
    if (a < 1 || static_cast<std::size_t>(a) > spec.dim || seen[a - 1]) {
      throw Error(ErrorKind::InvalidArgument, "symmetry hint is not a signed permutation");
    }
    seen[a - 1] = true;
  }
  std::set<LatticePoint> edges;
  for (const auto& g : spec.generators) {
    edges.insert(g);
    edges.insert(negate(g));
  }
  for (const auto& g : spec.generators) {
    if (!edges.count(apply(s, g))) {
      throw Error(ErrorKind::InvalidArgument, "symmetry hint does not preserve the edge set");
    }
  }
}

namespace detail {

inline std::vector<SignedPermutation> hyperoctahedral_generators(std::size_t n) {
  std::vector<SignedPermutation> out;
  SignedPermutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i + 1);
  if (n >= 2) {
    auto cycle = id;
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    out.push_back(cycle);
    auto swap = id;
    std::swap(swap[0], swap[1]);
    out.push_back(swap);
  }
  auto flip = id;
  flip[0] = -1;
  out.push_back(flip);
  return out;
}

inline std::size_t parse_dimension_suffix(const std::string& name, std::size_t prefix) {
  const std::string tail = name.substr(prefix);
  if (tail.size() != 1 || tail[0] < '1' || tail[0] > '4') {
    throw Error(ErrorKind::InvalidArgument, "graph '" + name + "': n must be 1..4");
  }
  return static_cast<std::size_t>(tail[0] - '0');
}

}  // namespace detail

/// Basis of the even-sum lattice D4 used for the d4cross chart.
inline std::vector<LatticePoint> d4_basis() { return {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}; }

/// The 24 one-sided edge segments of the crosspolytope tessellation: the 12
/// vectors e_i - e_j (i != j) and the 12 vectors +-(e_i + e_j).
inline std::vector<LatticePoint> d4_edge_vectors() {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      LatticePoint w(4, 0);
      w[i] = 1;
      w[j] = -1;
      out.push_back(w);
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (std::int64_t s : {1, -1}) {
        LatticePoint w(4, 0);
        w[i] = s;
        w[j] = s;
        out.push_back(w);
      }
    }
  }
  return out;
}

/// Integer coordinates of w in the row basis b (w must lie in the lattice).
inline LatticePoint lattice_coordinates(const std::vector<LatticePoint>& basis, const LatticePoint& w) {
  const std::size_t n = w.size();
  linalg::Matrix cols(n, RationalVector(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) cols[i][j] = Rational(static_cast<long>(basis[j][i]));
  }
  auto c = linalg::solve(cols, to_rational(std::span<const std::int64_t>(w)));
  if (!c) throw Error(ErrorKind::RankDeficient, "lattice basis is singular");
  LatticePoint out;
  for (const auto& x : *c) {
    if (!is_integral(x)) throw Error(ErrorKind::NonInteger, format_point(w) + " is not in the lattice");
    out.push_back(x.get_num().get_si());
  }
  return out;
}

inline GraphSpec builtin_graph(const std::string& name) {
  GraphSpec spec;
  spec.name = name;
  if (name.rfind("l1:", 0) == 0) {
    spec.dim = detail::parse_dimension_suffix(name, 3);
    for (std::size_t i = 0; i < spec.dim; ++i) {
      LatticePoint e(spec.dim, 0);
      e[i] = 1;
      spec.generators.push_back(e);
    }
    spec.symmetry_hints = detail::hyperoctahedral_generators(spec.dim);
  } else if (name.rfind("linf:", 0) == 0) {
    spec.dim = detail::parse_dimension_suffix(name, 5);
    LatticePoint x(spec.dim, -1);
    // Odometer over {-1,0,1}^n; keep vectors whose first nonzero entry is +1.
    while (true) {
      auto lead = leading_index(x);
      if (lead < x.size() && x[lead] > 0) spec.generators.push_back(x);
      std::size_t k = spec.dim;
      while (k > 0 && x[k - 1] == 1) x[--k] = -1;
      if (k == 0) break;
      ++x[k - 1];
    }
    spec.symmetry_hints = detail::hyperoctahedral_generators(spec.dim);
  } else if (name == "tri") {
    spec.dim = 2;
    spec.generators = {{1, 0}, {0, 1}, {1, 1}};
    spec.symmetry_hints = {{2, 1}, {-1, -2}};
  } else if (name == "d4cross") {
    spec.dim = 4;
    spec.basis = d4_basis();
    spec.original_segments = d4_edge_vectors();
    std::set<LatticePoint> gens;
    for (const auto& w : spec.original_segments) gens.insert(sign_canonical(lattice_coordinates(spec.basis, w)));
    spec.generators.assign(gens.begin(), gens.end());
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown graph '" + name + "' (expected l1:n, linf:n, tri, d4cross)");
  }
  std::sort(spec.generators.begin(), spec.generators.end());
  for (const auto& s : spec.symmetry_hints) validate_symmetry(spec, s);
  return spec;
}

/// Accepts a builtin name or, failing that, nothing (callers read files).
inline std::vector<std::string> builtin_graph_names() {
  return {"l1:1", "l1:2", "l1:3", "l1:4", "linf:1", "linf:2", "linf:3", "linf:4", "tri", "d4cross"};
}

// Graph spec text format:
//   name <string>          (optional)
//   dim <n>
//   generators             followed by rows of n integers
//   symmetry_hints         followed by rows of n signed 1-based indices (optional)
//   basis                  followed by n rows of n integers (optional)
//   segments               followed by rows of n integers (optional)

inline std::string write_graph_spec(const GraphSpec& spec) {
  std::string out;
  if (!spec.name.empty()) out += "name " + spec.name + "\n";
  out += "dim " + std::to_string(spec.dim) + "\n";
  out += "generators\n";
  for (const auto& g : spec.generators) out += io::join(g) + "\n";
  if (!spec.symmetry_hints.empty()) {
    out += "symmetry_hints\n";
    for (const auto& s : spec.symmetry_hints) out += io::join(s) + "\n";
  }
  if (!spec.basis.empty()) {
    out += "basis\n";
    for (const auto& b : spec.basis) out += io::join(b) + "\n";
  }
  if (!spec.original_segments.empty()) {
    out += "segments\n";
    for (const auto& w : spec.original_segments) out += io::join(w) + "\n";
  }
  return out;
}

inline GraphSpec read_graph_spec(const std::string& text) {
  io::LineReader in(text);
  std::vector<std::string> tok;
  GraphSpec spec;
  std::optional<std::size_t> dim;
  std::string block;
  while (in.next(tok)) {
    if (tok[0] == "name") {
      if (tok.size() != 2) in.fail("expected 'name <string>'");
      spec.name = tok[1];
      block.clear();
    } else if (tok[0] == "dim") {
      if (tok.size() != 2) in.fail("expected 'dim n'");
      dim = in.count(tok[1]);
      if (*dim < 1) in.fail("dim must be >= 1");
      spec.dim = *dim;
      block.clear();
    } else if (tok.size() == 1 &&
               (tok[0] == "generators" || tok[0] == "symmetry_hints" || tok[0] == "basis" || tok[0] == "segments")) {
      if (!dim) in.fail("'" + tok[0] + "' before 'dim'");
      block = tok[0];
    } else if (!block.empty()) {
      if (tok.size() != *dim) in.fail("row needs " + std::to_string(*dim) + " integers");
      LatticePoint row;
      for (const auto& t : tok) row.push_back(in.int64(t));
      if (block == "generators") {
        spec.generators.push_back(std::move(row));
      } else if (block == "symmetry_hints") {
        spec.symmetry_hints.emplace_back(row.begin(), row.end());
      } else if (block == "basis") {
        spec.basis.push_back(std::move(row));
      } else {
        spec.original_segments.push_back(std::move(row));
      }
    } else {
      in.fail("unexpected '" + tok[0] + "'");
    }
  }
  if (!dim) throw Error(ErrorKind::Parse, "graph spec has no 'dim'");
  if (spec.generators.empty()) throw Error(ErrorKind::Parse, "graph spec has no generators");
  PLGraph g = spec.graph();  // surfaces validation errors
  spec.generators = g.generators();
  for (const auto& s : spec.symmetry_hints) validate_symmetry(spec, s);
  if (!spec.basis.empty() && spec.basis.size() != spec.dim) {
    throw Error(ErrorKind::Parse, "basis needs exactly dim rows");
  }
  return spec;
}

}  // namespace isozono
