#pragma once

#include "isozono/linalg.hpp"
#include "isozono/number.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

namespace isozono {

using LatticePoint = std::vector<std::int64_t>;

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : p) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using LatticePointSet = std::unordered_set<LatticePoint, LatticePointHash>;

inline std::string format_point(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

/// Graph on Z^n whose edges at every vertex u are (u, u +- v_i).
class PLGraph {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return 2 * generators_.size(); }
  const std::vector<LatticePoint>& generators() const { return generators_; }
  const LatticePoint& generator(std::size_t i) const { return generators_.at(i); }

  friend bool operator==(const PLGraph&, const PLGraph&) = default;

 private:
  friend PLGraph validate_pl_graph(std::size_t dim, std::vector<LatticePoint> raw);
  std::size_t dim_ = 0;
  std::vector<LatticePoint> generators_;
};

/// Checks the PL graph conditions and returns generators sign-normalized
/// (first nonzero coordinate positive) and sorted.
inline PLGraph validate_pl_graph(std::size_t dim, std::vector<LatticePoint> raw) {
  if (dim < 1) throw Error(ErrorKind::InvalidArgument, "PL graph dimension must be >= 1");
  for (const auto& v : raw) {
    require_same_dim(v.size(), dim, "validate_pl_graph");
    if (is_zero(v)) throw Error(ErrorKind::ZeroVector, "generator " + format_point(v) + " is zero");
    if (!is_primitive(std::span<const std::int64_t>(v))) {
      throw Error(ErrorKind::NonPrimitive, "generator " + format_point(v) + " is not primitive");
    }
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (raw[i] == raw[j]) {
        throw Error(ErrorKind::DuplicateGenerator, "generator " + format_point(raw[i]) + " is listed twice");
      }
      if (raw[i] == negate(raw[j])) {
        throw Error(ErrorKind::AntipodalPair,
                    "generators " + format_point(raw[i]) + " and " + format_point(raw[j]) + " are antipodal");
      }
    }
  }
  linalg::IntMatrix m;
  for (const auto& v : raw) m.push_back(to_integer(v));
  if (linalg::rank(m) != dim) {
    throw Error(ErrorKind::RankDeficient, "generators span a space of dimension " + std::to_string(linalg::rank(m)) +
                                              " < " + std::to_string(dim));
  }
  PLGraph g;
  g.dim_ = dim;
  for (auto& v : raw) g.generators_.push_back(sign_canonical(std::move(v)));
  std::sort(g.generators_.begin(), g.generators_.end());
  return g;
}

/// A finite set of distinct lattice points, kept sorted.
class LatticeSet {
 public:
  LatticeSet() = default;
  LatticeSet(std::size_t dim, std::vector<LatticePoint> points) : dim_(dim), points_(std::move(points)) {
    for (const auto& p : points_) require_same_dim(p.size(), dim_, "LatticeSet");
    std::sort(points_.begin(), points_.end());
    auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end()) throw Error(ErrorKind::InvalidArgument, "duplicate point " + format_point(*dup));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  bool contains(const LatticePoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

  LatticeSet translated(const LatticePoint& t) const {
    std::vector<LatticePoint> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(add(p, t));
    return LatticeSet(dim_, std::move(out));
  }

  /// Translate so the lexicographically smallest point is the origin.
  LatticeSet canonical() const {
    if (points_.empty()) return *this;
    return translated(negate(points_.front()));
  }

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;
  friend bool operator<(const LatticeSet& a, const LatticeSet& b) { return a.points_ < b.points_; }

 private:
  std::size_t dim_ = 0;
  std::vector<LatticePoint> points_;
};

/// Number of edges with exactly one endpoint in S, by direct enumeration.
inline std::int64_t edge_boundary_direct(const PLGraph& g, const LatticeSet& s) {
  require_same_dim(s.dim(), g.dim(), "edge_boundary_direct");
  LatticePointSet members(s.points().begin(), s.points().end());
  std::int64_t count = 0;
  LatticePoint q(g.dim());
  for (const auto& p : s.points()) {
    for (const auto& v : g.generators()) {
      for (int sign : {1, -1}) {
        for (std::size_t k = 0; k < q.size(); ++k) q[k] = p[k] + sign * v[k];
        if (!members.count(q)) ++count;
      }
    }
  }
  return count;
}

namespace detail {

// Lines of direction v (primitive) through S. Two lattice points lie on the
// same line iff |v|^2 x - <x,v> v agree; along a line consecutive lattice
// points differ by |v|^2 in <x, v>.
inline std::map<LatticePoint, std::vector<std::int64_t>> lines_along(const LatticeSet& s, const LatticePoint& v) {
  const std::int64_t vv = dot(v, v);
  std::map<LatticePoint, std::vector<std::int64_t>> lines;
  LatticePoint key(v.size());
  for (const auto& x : s.points()) {
    const std::int64_t xv = dot(x, v);
    for (std::size_t k = 0; k < v.size(); ++k) key[k] = vv * x[k] - xv * v[k];
    lines[key].push_back(xv);
  }
  for (auto& [_, pos] : lines) std::sort(pos.begin(), pos.end());
  return lines;
}

inline void check_index(const PLGraph& g, std::size_t i) {
  if (i >= g.generators().size()) {
    throw Error(ErrorKind::InvalidArgument, "generator index " + std::to_string(i) + " out of range");
  }
}

}  // namespace detail

/// |gap_{v_i}(S)|: first missing points along direction v_i after which S resumes.
inline std::int64_t gap_count(const PLGraph& g, const LatticeSet& s, std::size_t i) {
  require_same_dim(s.dim(), g.dim(), "gap_count");
  detail::check_index(g, i);
  const auto& v = g.generator(i);
  const std::int64_t step = dot(v, v);
  std::int64_t gaps = 0;
  for (const auto& [_, pos] : detail::lines_along(s, v)) {
    for (std::size_t j = 1; j < pos.size(); ++j) {
      if (pos[j] - pos[j - 1] > step) ++gaps;
    }
  }
  return gaps;
}

/// |P_{v_i}(S)|: number of classes of S modulo Z v_i.
inline std::int64_t projection_count(const PLGraph& g, const LatticeSet& s, std::size_t i) {
  require_same_dim(s.dim(), g.dim(), "projection_count");
  detail::check_index(g, i);
  return static_cast<std::int64_t>(detail::lines_along(s, g.generator(i)).size());
}

struct GeneratorTerms {
  std::int64_t projection_count;
  std::int64_t gap_count;
};

struct EdgeBoundaryReport {
  std::int64_t direct_count = 0;
  std::vector<GeneratorTerms> per_generator;
  bool identity_holds = false;

  std::int64_t identity_rhs() const {
    std::int64_t s = 0;
    for (const auto& t : per_generator) s += t.projection_count + t.gap_count;
    return 2 * s;
  }
};

/// Both sides of |∂_e S| = 2 Σ_i (|P_{v_i}(S)| + |gap_{v_i}(S)|).
inline EdgeBoundaryReport boundary_identity_report(const PLGraph& g, const LatticeSet& s) {
  EdgeBoundaryReport r;
  r.direct_count = edge_boundary_direct(g, s);
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    r.per_generator.push_back({projection_count(g, s, i), gap_count(g, s, i)});
  }
  r.identity_holds = r.direct_count == r.identity_rhs();
  return r;
}

}  // namespace isozono
