#pragma once

#include "isozono/boundary_functional.hpp"
#include "isozono/catalog.hpp"
#include "isozono/lattice.hpp"
#include "isozono/pl_graph.hpp"
#include "isozono/polytope.hpp"
#include "isozono/zonotope.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace isozono {

/// Enumeration budget: ISOZONO_BUDGET if set, else 2e9 leaves.
inline Integer search_budget() {
  if (const char* env = std::getenv("ISOZONO_BUDGET")) {
    try {
      Integer b(env);
      if (b > 0) return b;
    } catch (const std::invalid_argument&) {
    }
    throw Error(ErrorKind::InvalidArgument, std::string("ISOZONO_BUDGET is not a positive integer: ") + env);
  }
  return Integer(2000000000);
}

struct SearchResult {
  std::size_t cardinality = 0;
  std::int64_t min_boundary = 0;
  std::vector<LatticeSet> witnesses;  // canonical, deduplicated, lexicographic
  bool exhaustive = false;
  // Exhaustive: optimal subsets enumerated (one per translation class).
  // Heuristic: visits to best-valued states.
  std::uint64_t optimal_count = 0;
  bool truncated = false;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

struct SearchOptions {
  std::size_t witness_cap = 100;
  bool connected_only = false;
  // Signed coordinate permutations preserving the edge set; when non-empty,
  // witnesses are reported once per orbit of the generated group.
  std::vector<SignedPermutation> symmetries;
  std::optional<Integer> budget;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

inline std::vector<SignedPermutation> symmetry_closure(const std::vector<SignedPermutation>& gens, std::size_t n) {
  SignedPermutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i + 1);
  std::set<SignedPermutation> seen{id};
  std::vector<SignedPermutation> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      require_same_dim(g.size(), n, "symmetry hint");
      // (g o h)(x)_i = g applied to h(x).
      SignedPermutation c(n);
      for (std::size_t i = 0; i < n; ++i) {
        const int gi = g[i];
        const int hi = queue[head][static_cast<std::size_t>(std::abs(gi) - 1)];
        c[i] = gi < 0 ? -hi : hi;
      }
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return queue;
}

/// Orbit representative: the smallest canonical image under the group.
inline LatticeSet orbit_representative(const LatticeSet& s, const std::vector<SignedPermutation>& group) {
  LatticeSet best = s.canonical();
  for (const auto& g : group) {
    std::vector<LatticePoint> img;
    img.reserve(s.size());
    for (const auto& p : s.points()) img.push_back(apply(g, p));
    LatticeSet c = LatticeSet(s.dim(), std::move(img)).canonical();
    if (c < best) best = std::move(c);
  }
  return best;
}

/// The `cap` lexicographically smallest witnesses at the current optimum.
struct WitnessPool {
  std::int64_t best_edges = -1;
  std::set<LatticeSet> kept;
  std::uint64_t count = 0;  // optimal visits, before deduplication
  bool dropped = false;
  std::size_t cap = 100;

  void offer(std::int64_t edges, const std::function<LatticeSet()>& make) {
    if (edges < best_edges) return;
    if (edges > best_edges) {
      best_edges = edges;
      kept.clear();
      count = 0;
      dropped = false;
    }
    ++count;
    insert(make());
  }

  void insert(LatticeSet s) {
    if (!kept.insert(std::move(s)).second) return;
    if (kept.size() > cap) {
      kept.erase(std::prev(kept.end()));
      dropped = true;
    }
  }

  void merge(const WitnessPool& other) {
    if (other.best_edges < best_edges) return;
    if (other.best_edges > best_edges) {
      best_edges = other.best_edges;
      kept.clear();
      count = 0;
      dropped = false;
    }
    for (const auto& s : other.kept) insert(s);
    count += other.count;
    dropped = dropped || other.dropped;
  }
};

inline LatticePoint add_scaled(const LatticePoint& p, const LatticePoint& v, std::int64_t s) {
  LatticePoint q(p);
  for (std::size_t k = 0; k < q.size(); ++k) q[k] += s * v[k];
  return q;
}

}  // namespace detail

/// Minimum edge boundary over m-sets whose canonical translate lies in
/// [-r, r]^n. The origin is always a member; the other m-1 points are chosen
/// from box points lexicographically greater than it.
inline SearchResult exhaustive_min_boundary(const PLGraph& g, std::size_t m, std::int64_t box_radius,
                                            const SearchOptions& opt = {}) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "exhaustive_min_boundary: m must be >= 1");
  if (box_radius < 0) throw Error(ErrorKind::InvalidArgument, "exhaustive_min_boundary: negative box radius");
  const std::size_t n = g.dim();
  const std::int64_t k = static_cast<std::int64_t>(g.generators().size());

  // Index 0 is the origin; candidates follow in lexicographic order.
  std::vector<LatticePoint> pts{LatticePoint(n, 0)};
  {
    LatticePoint x(n, -box_radius);
    for (;;) {
      if (x > pts.front()) pts.push_back(x);
      std::size_t d = n;
      while (d > 0 && x[d - 1] == box_radius) x[--d] = -box_radius;
      if (d == 0) break;
      ++x[d - 1];
    }
    std::sort(pts.begin() + 1, pts.end());
  }
  const std::size_t total = pts.size();
  if (m > total) throw Error(ErrorKind::InvalidArgument, "exhaustive_min_boundary: box holds fewer than m points");

  Integer leaves;
  mpz_bin_uiui(leaves.get_mpz_t(), total - 1, m - 1);
  const Integer budget = opt.budget ? *opt.budget : search_budget();
  if (leaves > budget) {
    throw Error(ErrorKind::BudgetExceeded, "exhaustive_min_boundary: C(" + std::to_string(total - 1) + ", " +
                                               std::to_string(m - 1) + ") = " + leaves.get_str() +
                                               " subsets exceed the budget " + budget.get_str());
  }

  // lower[i]: lexicographically smaller neighbours (at most k, since every
  // generator is sign-canonical); all[i]: every neighbour inside the box.
  std::map<LatticePoint, std::size_t> index;
  for (std::size_t i = 0; i < total; ++i) index.emplace(pts[i], i);
  std::vector<std::vector<std::size_t>> lower(total), all(total);
  for (std::size_t i = 0; i < total; ++i) {
    for (const auto& v : g.generators()) {
      for (std::int64_t s : {-1, 1}) {
        auto it = index.find(detail::add_scaled(pts[i], v, s));
        if (it == index.end()) continue;
        all[i].push_back(it->second);
        if (it->second < i) lower[i].push_back(it->second);
      }
    }
  }

  const auto group = opt.symmetries.empty() ? std::vector<SignedPermutation>{}
                                            : detail::symmetry_closure(opt.symmetries, n);
  const std::int64_t mm = static_cast<std::int64_t>(m);
  // Best achievable extra edges when r more points join a set of size s.
  auto bound = [&](std::int64_t s, std::int64_t r) {
    std::int64_t b = 0;
    for (std::int64_t j = 0; j < r; ++j) b += std::min(k, s + j);
    return b;
  };

  std::atomic<std::int64_t> shared_best{-1};
  std::atomic<std::size_t> next_task{1};
  std::vector<detail::WitnessPool> pools;
  std::mutex pools_mutex;

  auto worker = [&] {
    detail::WitnessPool pool;
    pool.cap = opt.witness_cap;
    std::vector<std::size_t> chosen{0};
    std::vector<char> member(total, 0);
    member[0] = 1;

    auto connected = [&] {
      std::vector<std::size_t> stack{0};
      std::vector<char> seen(total, 0);
      seen[0] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        for (auto j : all[i]) {
          if (member[j] && !seen[j]) {
            seen[j] = 1;
            ++reached;
            stack.push_back(j);
          }
        }
      }
      return reached == chosen.size();
    };

    auto leaf = [&](std::int64_t edges) {
      if (opt.connected_only && !connected()) return;
      pool.offer(edges, [&] {
        std::vector<LatticePoint> s;
        for (auto i : chosen) s.push_back(pts[i]);
        LatticeSet set(n, std::move(s));
        return group.empty() ? set : detail::orbit_representative(set, group);
      });
      std::int64_t cur = shared_best.load();
      while (edges > cur && !shared_best.compare_exchange_weak(cur, edges)) {
      }
    };

    auto gain = [&](std::size_t i) {
      std::int64_t e = 0;
      for (auto j : lower[i]) e += member[j];
      return e;
    };

    std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t from, std::int64_t edges) {
      const std::int64_t size = static_cast<std::int64_t>(chosen.size());
      if (size == mm) {
        leaf(edges);
        return;
      }
      const std::int64_t remaining = mm - size;
      if (edges + bound(size, remaining) < shared_best.load()) return;
      for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= total; ++i) {
        const std::int64_t e = edges + gain(i);
        chosen.push_back(i);
        member[i] = 1;
        dfs(i + 1, e);
        member[i] = 0;
        chosen.pop_back();
      }
    };

    if (m == 1) {
      if (next_task.fetch_add(1) == 1) leaf(0);
    } else {
      for (std::size_t first = next_task.fetch_add(1); first + (m - 2) < total; first = next_task.fetch_add(1)) {
        const std::int64_t e = gain(first);
        if (e + bound(2, mm - 2) < shared_best.load()) continue;
        chosen.push_back(first);
        member[first] = 1;
        dfs(first + 1, e);
        member[first] = 0;
        chosen.pop_back();
      }
    }
    std::lock_guard<std::mutex> lock(pools_mutex);
    pools.push_back(std::move(pool));
  };

  unsigned threads = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, total)));
  std::vector<std::thread> team;
  for (unsigned t = 1; t < threads; ++t) team.emplace_back(worker);
  worker();
  for (auto& t : team) t.join();

  detail::WitnessPool merged;
  merged.cap = opt.witness_cap;
  for (const auto& p : pools) merged.merge(p);

  SearchResult out;
  out.cardinality = m;
  out.exhaustive = true;
  if (merged.best_edges < 0) {
    throw Error(ErrorKind::InvalidArgument, "exhaustive_min_boundary: no admissible set in the box");
  }
  out.min_boundary = 2 * k * mm - 2 * merged.best_edges;
  out.witnesses.assign(merged.kept.begin(), merged.kept.end());
  out.optimal_count = merged.count;
  out.truncated = merged.dropped;
  return out;
}

/// Simulated annealing over m-sets: remove one point, add a point adjacent to
/// the rest. Deterministic for a fixed seed.
inline SearchResult local_search_min_boundary(const PLGraph& g, std::size_t m, std::uint64_t iterations,
                                              std::uint64_t seed, const SearchOptions& opt = {}) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "local_search_min_boundary: m must be >= 1");
  const std::size_t n = g.dim();
  const auto& gens = g.generators();
  const std::int64_t k = static_cast<std::int64_t>(gens.size());
  const std::int64_t mm = static_cast<std::int64_t>(m);
  const auto group = opt.symmetries.empty() ? std::vector<SignedPermutation>{}
                                            : detail::symmetry_closure(opt.symmetries, n);
  std::mt19937_64 rng(seed);

  std::vector<LatticePoint> pts;
  LatticePointSet members;
  auto degree_in = [&](const LatticePoint& x) {
    std::int64_t d = 0;
    for (const auto& v : gens) {
      d += members.count(detail::add_scaled(x, v, 1)) + members.count(detail::add_scaled(x, v, -1));
    }
    return d;
  };
  auto random_neighbor = [&](const LatticePoint& x) {
    const auto& v = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)];
    return detail::add_scaled(x, v, (rng() & 1U) ? 1 : -1);
  };

  // Greedy randomized growth from the origin: add the frontier point with the
  // most neighbours already inside, ties broken at random.
  std::int64_t edges = 0;
  pts.push_back(LatticePoint(n, 0));
  members.insert(pts.back());
  while (pts.size() < m) {
    std::vector<LatticePoint> frontier;
    std::int64_t best = -1;
    for (const auto& p : pts) {
      for (const auto& v : gens) {
        for (std::int64_t s : {-1, 1}) {
          auto q = detail::add_scaled(p, v, s);
          if (members.count(q)) continue;
          const auto d = degree_in(q);
          if (d > best) {
            best = d;
            frontier.clear();
          }
          if (d == best) frontier.push_back(std::move(q));
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    auto q = frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)];
    edges += best;
    members.insert(q);
    pts.push_back(std::move(q));
  }

  detail::WitnessPool pool;
  pool.cap = opt.witness_cap;
  auto record = [&] {
    pool.offer(edges, [&] {
      LatticeSet set(n, pts);
      return group.empty() ? set.canonical() : detail::orbit_representative(set, group);
    });
  };
  record();

  const double t0 = 2.0, t1 = 0.02;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t it = 0; it < iterations && m > 1; ++it) {
    const double temp = t0 * std::pow(t1 / t0, static_cast<double>(it) / static_cast<double>(iterations));
    const std::size_t out_idx = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    std::size_t anchor = std::uniform_int_distribution<std::size_t>(0, m - 2)(rng);
    if (anchor >= out_idx) ++anchor;
    LatticePoint q = random_neighbor(pts[anchor]);
    if (members.count(q)) continue;
    const LatticePoint p = pts[out_idx];
    members.erase(p);
    const std::int64_t delta = degree_in(q) - degree_in(p);  // change in internal edges
    const double cost = -2.0 * static_cast<double>(delta);   // change in boundary
    if (cost <= 0 || unit(rng) < std::exp(-cost / temp)) {
      members.insert(q);
      pts[out_idx] = std::move(q);
      edges += delta;
      if (edges >= pool.best_edges) record();
    } else {
      members.insert(p);
    }
  }

  SearchResult out;
  out.cardinality = m;
  out.exhaustive = false;
  out.min_boundary = 2 * k * mm - 2 * pool.best_edges;
  out.witnesses.assign(pool.kept.begin(), pool.kept.end());
  out.optimal_count = pool.count;
  out.truncated = pool.dropped;
  return out;
}

/// alpha Z + t with both representations.
inline Polytope dilated_zonotope(const Zonotope& z, const Rational& alpha, const RationalVector& t = {}) {
  if (alpha <= 0) throw Error(ErrorKind::InvalidArgument, "dilation factor must be positive");
  const RationalVector shift = t.empty() ? RationalVector(z.dim(), Rational(0)) : t;
  require_same_dim(shift.size(), z.dim(), "dilated_zonotope");
  Polytope base = zonotope_polytope(z);
  std::vector<RationalVector> verts;
  for (const auto& v : base.vertices()) verts.push_back(add(scale(v, alpha), shift));
  std::vector<Facet> facets;
  for (const auto& f : base.facets()) facets.push_back({f.normal, f.offset * alpha + dot(f.normal, shift)});
  return Polytope(z.dim(), z.dim(), std::move(verts), std::move(facets));
}

struct ZonotopePointSet {
  LatticeSet set;
  std::size_t cardinality = 0;
  std::int64_t boundary = 0;
};

/// Z^n ∩ alpha Z(G).
inline ZonotopePointSet zonotope_point_set(const PLGraph& g, const Rational& alpha) {
  if (alpha <= 0) throw Error(ErrorKind::InvalidArgument, "zonotope_point_set: alpha must be positive");
  auto pts = lattice_points(dilated_zonotope(build_zonotope(g), alpha));
  ZonotopePointSet out;
  out.set = LatticeSet(g.dim(), std::move(pts));
  out.cardinality = out.set.size();
  out.boundary = edge_boundary_direct(g, out.set);
  return out;
}

struct ConvergenceRow {
  Rational alpha;
  std::int64_t points = 0;
  Rational volume;
  std::int64_t discrete_boundary = 0;
  Rational continuous_boundary;
  Rational vol_ratio;       // volume / points
  Rational boundary_ratio;  // continuous / discrete

  friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

/// Lattice point counts and boundaries of alpha Z against their continuous
/// counterparts. b(alpha Z) = alpha^{n-1} b(Z), with b(Z) from exact sweeps.
inline std::vector<ConvergenceRow> convergence_experiment(const PLGraph& g, const std::vector<Rational>& alphas,
                                                          std::optional<Integer> budget = std::nullopt) {
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] <= 0) throw Error(ErrorKind::InvalidArgument, "convergence_experiment: alphas must be positive");
    if (i > 0 && alphas[i] <= alphas[i - 1]) {
      throw Error(ErrorKind::InvalidArgument, "convergence_experiment: alphas must be strictly increasing");
    }
  }
  const Integer limit = budget ? *budget : search_budget();
  const Zonotope z = build_zonotope(g);
  const Polytope zp = zonotope_polytope(z);
  const Rational vol = zonotope_volume(z);
  const Rational b = continuous_boundary(zp, z).value;
  const unsigned n = static_cast<unsigned>(g.dim());

  std::vector<ConvergenceRow> rows;
  for (const auto& alpha : alphas) {
    ConvergenceRow r;
    r.alpha = alpha;
    r.volume = pow(alpha, n) * vol;
    // The point count is at most the volume of (alpha + 1) Z.
    if (pow(alpha + 1, n) * vol > Rational(limit)) {
      throw Error(ErrorKind::BudgetExceeded, "convergence_experiment: alpha = " + alpha.get_str() +
                                                 " needs more lattice points than the budget " + limit.get_str());
    }
    auto s = zonotope_point_set(g, alpha);
    if (s.cardinality < 2) {
      throw Error(ErrorKind::InvalidArgument,
                  "convergence_experiment: alpha = " + alpha.get_str() + " leaves at most one lattice point");
    }
    r.points = static_cast<std::int64_t>(s.cardinality);
    r.discrete_boundary = s.boundary;
    r.continuous_boundary = pow(alpha, n - 1) * b;
    r.vol_ratio = r.volume / r.points;
    r.boundary_ratio = r.continuous_boundary / r.discrete_boundary;
    rows.push_back(std::move(r));
  }
  return rows;
}

/// A member of the family { Z^n ∩ (alpha Z + t) } with t ∈ {0, 1/2}^n.
struct FamilySet {
  Rational alpha;
  RationalVector shift;
  LatticeSet set;  // canonical
};

namespace detail {

/// Gauge of alpha Z: max over facets of <u, y> / h(u).
inline Rational zonotope_gauge(const std::vector<Facet>& facets, const RationalVector& y) {
  Rational g(0);
  for (const auto& f : facets) g = std::max(g, Rational(dot(f.normal, y) / f.offset));
  return g;
}

}  // namespace detail

/// All distinct family sets with at most max_size points, ordered by
/// (size, shift, set).
inline std::vector<FamilySet> zonotope_family(const PLGraph& g, std::size_t max_size) {
  const std::size_t n = g.dim();
  const Zonotope z = build_zonotope(g);
  const Polytope zp = zonotope_polytope(z);
  std::vector<Rational> reach(n);  // h(e_k)
  for (std::size_t k = 0; k < n; ++k) {
    IntVector e(n, Integer(0));
    e[k] = 1;
    reach[k] = Rational(support(z, e));
  }

  std::vector<FamilySet> out;
  std::set<std::pair<std::size_t, LatticeSet>> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RationalVector t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = (mask >> k) & 1U ? Rational(1, 2) : Rational(0);
    // Grow alpha until more than max_size points have gauge <= alpha; every
    // point of gauge <= alpha lies in the box |x_k - t_k| <= alpha h(e_k).
    for (Rational alpha_max(1);; alpha_max *= 2) {
      std::vector<std::pair<Rational, LatticePoint>> graded;
      LatticePoint lo(n), hi(n);
      for (std::size_t k = 0; k < n; ++k) {
        lo[k] = ceil_of(t[k] - alpha_max * reach[k]).get_si();
        hi[k] = floor_of(t[k] + alpha_max * reach[k]).get_si();
      }
      LatticePoint x = lo;
      for (;;) {
        RationalVector y(n);
        for (std::size_t k = 0; k < n; ++k) y[k] = Rational(x[k]) - t[k];
        Rational gauge = detail::zonotope_gauge(zp.facets(), y);
        if (gauge <= alpha_max) graded.emplace_back(std::move(gauge), x);
        std::size_t d = n;
        while (d > 0 && x[d - 1] == hi[d - 1]) {
          x[d - 1] = lo[d - 1];
          --d;
        }
        if (d == 0) break;
        ++x[d - 1];
      }
      if (graded.size() <= max_size) continue;
      std::sort(graded.begin(), graded.end());
      for (std::size_t i = 0; i < graded.size() && i < max_size; ++i) {
        // A family set ends at each change of gauge value.
        if (i + 1 < graded.size() && graded[i + 1].first == graded[i].first) continue;
        std::vector<LatticePoint> members;
        for (std::size_t j = 0; j <= i; ++j) members.push_back(graded[j].second);
        LatticeSet s = LatticeSet(n, std::move(members)).canonical();
        if (seen.emplace(s.size(), s).second) out.push_back({graded[i].first, t, std::move(s)});
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const FamilySet& a, const FamilySet& b) {
    if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
    if (a.shift != b.shift) return a.shift < b.shift;
    return a.set < b.set;
  });
  return out;
}

/// Number of facets of conv(S) when it is full-dimensional, else 0.
inline std::size_t hull_facet_count(const LatticeSet& s) {
  std::vector<RationalVector> pts;
  for (const auto& p : s.points()) pts.push_back(to_rational(std::span<const std::int64_t>(p)));
  if (pts.empty()) return 0;
  Polytope h = convex_hull(pts);
  return h.full_dimensional() ? h.facets().size() : 0;
}

struct ShapeAnalysis {
  std::size_t hull_facets = 0;
  std::optional<FamilySet> family_match;
};

inline ShapeAnalysis shape_analysis(const std::vector<FamilySet>& family, const LatticeSet& witness) {
  ShapeAnalysis a;
  a.hull_facets = hull_facet_count(witness);
  const LatticeSet c = witness.canonical();
  for (const auto& f : family) {
    if (f.set == c) {
      a.family_match = f;
      break;
    }
  }
  return a;
}

inline ShapeAnalysis shape_analysis(const PLGraph& g, const LatticeSet& witness) {
  return shape_analysis(zonotope_family(g, witness.size()), witness);
}

struct LimitingShapeRow {
  std::size_t m = 0;
  std::int64_t min_boundary = 0;
  std::vector<LatticeSet> witnesses;
  std::vector<std::size_t> hull_facets;  // per witness
  bool family_exists = false;            // some family set has m points
  std::optional<std::int64_t> family_boundary;
  bool matches = false;  // some witness is a family set
  std::optional<std::size_t> nearest_below, nearest_above;  // family sizes around m
};

/// For each m <= m_max, exhaustive witnesses against the zonotope family.
/// With symmetry hints, witnesses are orbit representatives, so a family set
/// is matched through its own orbit representative.
inline std::vector<LimitingShapeRow> limiting_shape_report(const PLGraph& g, std::size_t m_max,
                                                           std::int64_t box_radius, const SearchOptions& opt = {}) {
  if (m_max < 1) throw Error(ErrorKind::InvalidArgument, "limiting_shape_report: m_max must be >= 1");
  auto family = zonotope_family(g, m_max + 1);
  const auto group = opt.symmetries.empty() ? std::vector<SignedPermutation>{}
                                            : detail::symmetry_closure(opt.symmetries, g.dim());
  std::vector<LimitingShapeRow> rows;
  for (std::size_t m = 1; m <= m_max; ++m) {
    auto res = exhaustive_min_boundary(g, m, box_radius, opt);
    LimitingShapeRow row;
    row.m = m;
    row.min_boundary = res.min_boundary;
    row.witnesses = res.witnesses;
    std::set<LatticeSet> wanted(res.witnesses.begin(), res.witnesses.end());
    for (const auto& f : family) {
      const std::size_t size = f.set.size();
      if (size < m) row.nearest_below = size;
      if (size > m && !row.nearest_above) row.nearest_above = size;
      if (size != m) continue;
      row.family_exists = true;
      const std::int64_t fb = edge_boundary_direct(g, f.set);
      if (!row.family_boundary || fb < *row.family_boundary) row.family_boundary = fb;
      const LatticeSet rep = group.empty() ? f.set : detail::orbit_representative(f.set, group);
      if (wanted.count(rep)) row.matches = true;
    }
    for (const auto& w : res.witnesses) row.hull_facets.push_back(hull_facet_count(w));
    rows.push_back(std::move(row));
  }
  return rows;
}

// --- reports -------------------------------------------------------------

inline std::string search_report_tsv(const SearchResult& r) {
  std::ostringstream os;
  os << "cardinality\tmin_boundary\texhaustive\toptimal_count\twitnesses_reported\n";
  os << r.cardinality << '\t' << r.min_boundary << '\t' << (r.exhaustive ? "true" : "false") << '\t'
     << r.optimal_count << '\t' << r.witnesses.size() << '\n';
  return os.str();
}

inline std::string convergence_report_tsv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "alpha\tpoints\tvolume\tdiscrete_boundary\tcontinuous_boundary\tvol_ratio\tboundary_ratio\n";
  for (const auto& r : rows) {
    os << r.alpha.get_str() << '\t' << r.points << '\t' << r.volume.get_str() << '\t' << r.discrete_boundary << '\t'
       << r.continuous_boundary.get_str() << '\t' << r.vol_ratio.get_str() << '\t' << r.boundary_ratio.get_str()
       << '\n';
  }
  return os.str();
}

inline std::string limiting_shape_report_tsv(const std::vector<LimitingShapeRow>& rows) {
  std::ostringstream os;
  os << "m\tmin_boundary\twitnesses\thull_facets\tfamily_exists\tfamily_boundary\tmatches\tnearest_below\t"
        "nearest_above\n";
  auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string("-"); };
  for (const auto& r : rows) {
    std::string facets;
    for (std::size_t i = 0; i < r.hull_facets.size(); ++i) facets += (i ? "," : "") + std::to_string(r.hull_facets[i]);
    os << r.m << '\t' << r.min_boundary << '\t' << r.witnesses.size() << '\t' << (facets.empty() ? "-" : facets)
       << '\t' << (r.family_exists ? "yes" : "no") << '\t' << opt(r.family_boundary) << '\t'
       << (r.matches ? "yes" : "no") << '\t' << opt(r.nearest_below) << '\t' << opt(r.nearest_above) << '\n';
  }
  return os.str();
}

}  // namespace isozono
