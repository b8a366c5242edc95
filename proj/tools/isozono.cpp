// isozono: command-line driver for edge boundaries, zonotopes, searches and
// the regression suite.

#include "isozono/boundary_functional.hpp"
#include "isozono/catalog.hpp"
#include "isozono/lattice_set_io.hpp"
#include "isozono/pl_graph.hpp"
#include "isozono/polytope_io.hpp"
#include "isozono/regression.hpp"
#include "isozono/render.hpp"
#include "isozono/search.hpp"
#include "isozono/zonotope.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace isozono;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void dump(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

/// Errors from a file are prefixed with its path (parse errors carry the line).
template <class F>
auto from_file(const std::string& path, F parse) {
  const std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

struct GraphSource {
  std::string name;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph", name, "Builtin graph: l1:n, linf:n, tri, d4cross");
    auto* s = cmd->add_option("--spec", file, "Graph spec file");
    g->excludes(s);
  }
  bool given() const { return !name.empty() || !file.empty(); }
  GraphSpec load() const {
    if (!name.empty()) return builtin_graph(name);
    if (!file.empty()) return from_file(file, read_graph_spec);
    throw Error(ErrorKind::InvalidArgument, "one of --graph or --spec is required");
  }
};

std::size_t axis_index(int axis, std::size_t dim) {
  if (axis < 1 || static_cast<std::size_t>(axis) > dim) {
    throw Error(ErrorKind::InvalidArgument, "--axis must be in 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(axis - 1);
}

/// d4cross is reported in its original coordinates unless the chart is asked for.
Zonotope reporting_zonotope(const GraphSpec& spec, bool chart) {
  if (!chart && !spec.original_segments.empty()) return build_zonotope_from_segments(spec.dim, spec.original_segments);
  return build_zonotope(spec.graph());
}

/// Same-family graph one dimension down, for l1:n and linf:n.
std::optional<std::string> lower_family(const std::string& name) {
  for (const std::string prefix : {"l1:", "linf:"}) {
    if (name.rfind(prefix, 0) == 0) {
      const auto n = std::stoul(name.substr(prefix.size()));
      if (n >= 2) return prefix + std::to_string(n - 1);
    }
  }
  return std::nullopt;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational list");
  return out;
}

void write_witnesses(const std::string& dir, const std::vector<LatticeSet>& ws) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    dump((std::filesystem::path(dir) / ("witness_" + std::to_string(i) + ".txt")).string(), write_lattice_set(ws[i]));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-isoperimetric experiments on primitive-lattice graphs"};
  app.require_subcommand(1);

  // validate
  auto* validate = app.add_subcommand("validate", "Check graph, set, polytope or zonotope files");
  GraphSource v_graph;
  v_graph.attach(validate);
  std::string v_set, v_poly, v_zono, v_out;
  validate->add_option("--set", v_set, "Lattice point set file");
  validate->add_option("--polytope", v_poly, "Polytope file");
  validate->add_option("--zonotope", v_zono, "Zonotope file");
  validate->add_option("--out", v_out, "Write the normalized graph spec here");

  // boundary
  auto* boundary = app.add_subcommand("boundary", "Edge boundary of a finite set, per generator");
  GraphSource b_graph;
  b_graph.attach(boundary);
  std::string b_set;
  boundary->add_option("--set", b_set, "Lattice point set file")->required();

  // zonotope
  auto* zono = app.add_subcommand("zonotope", "The zonotope Z = sum of [-v, v] over the generators");
  GraphSource z_graph;
  z_graph.attach(zono);
  bool z_fvector = false, z_volume = false, z_hrep = false, z_vertices = false, z_generators = false,
       z_chart = false, z_boundary = false;
  std::string z_render, z_out;
  zono->add_flag("--fvector", z_fvector, "Print the f-vector (vertices first)");
  zono->add_flag("--volume", z_volume, "Print the exact volume");
  zono->add_flag("--boundary", z_boundary, "Print b(Z) and n vol(Z)");
  zono->add_flag("--hrep", z_hrep, "Print the polytope with facet inequalities");
  zono->add_flag("--vertices", z_vertices, "Print the vertex list");
  zono->add_flag("--generators", z_generators, "Print the zonotope in its own text format");
  zono->add_flag("--chart", z_chart, "d4cross: use the Z^4 chart instead of original coordinates");
  zono->add_option("--render", z_render, "Write SVG (2D) or OFF (3D)");
  zono->add_option("--out", z_out, "Write the polytope file here");

  // search
  auto* search = app.add_subcommand("search", "Minimum edge boundary among m-point sets");
  GraphSource s_graph;
  s_graph.attach(search);
  std::size_t s_m = 0, s_cap = 100, s_limiting = 0;
  std::int64_t s_radius = 3;
  std::uint64_t s_iterations = 200000, s_seed = 1;
  unsigned s_threads = 0;
  bool s_heuristic = false, s_connected = false, s_symmetry = false;
  std::string s_out, s_witnesses;
  search->add_option("--m", s_m, "Cardinality");
  search->add_option("--radius", s_radius, "Exhaustive box [-r, r]^n")->check(CLI::NonNegativeNumber);
  search->add_flag("--heuristic", s_heuristic, "Simulated annealing instead of enumeration");
  search->add_option("--iterations", s_iterations, "Annealing steps");
  search->add_option("--seed", s_seed, "Annealing seed");
  search->add_flag("--connected", s_connected, "Keep only connected witnesses");
  search->add_flag("--symmetry", s_symmetry, "Deduplicate witnesses up to the spec's symmetry hints");
  search->add_option("--cap", s_cap, "Maximum witnesses kept");
  search->add_option("--threads", s_threads, "Worker threads (0: all cores)");
  search->add_option("--limiting", s_limiting, "Limiting-shape report for m = 1..M");
  search->add_option("--out", s_out, "Write the TSV report here");
  search->add_option("--witnesses", s_witnesses, "Directory for witness files");

  // section
  auto* section = app.add_subcommand("section", "Hyperplane section x_axis = level of the zonotope");
  GraphSource c_graph;
  c_graph.attach(section);
  int c_axis = 1;
  std::string c_level = "0", c_render, c_out;
  section->add_option("--axis", c_axis, "Coordinate axis, 1-based");
  section->add_option("--level", c_level, "Rational level");
  section->add_option("--render", c_render, "Write SVG (2D) or OFF (3D)");
  section->add_option("--out", c_out, "Write the polytope file here");

  // converge
  auto* converge = app.add_subcommand("converge", "Point counts and boundaries of dilated zonotopes");
  GraphSource g_graph;
  g_graph.attach(converge);
  std::string g_alphas = "1,2,3,5,10", g_out;
  converge->add_option("--alphas", g_alphas, "Comma-separated increasing dilation factors");
  converge->add_option("--out", g_out, "Write the TSV report here");

  // render
  auto* render_cmd = app.add_subcommand("render", "Render a polytope file or a graph's zonotope");
  GraphSource r_graph;
  r_graph.attach(render_cmd);
  std::string r_poly, r_out;
  render_cmd->add_option("--polytope", r_poly, "Polytope file");
  render_cmd->add_option("--out", r_out, "Output SVG or OFF path")->required();

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "Run the regression suite, one PASS/FAIL line each");
  std::vector<int> p_only;
  bool p_verbose = false;
  reproduce->add_option("--criterion", p_only, "Run only these criteria")->check(CLI::Range(1, 11));
  reproduce->add_flag("-v,--verbose", p_verbose, "Print every sub-check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      std::size_t checked = 0;
      if (v_graph.given()) {
        const auto spec = v_graph.load();
        const auto g = spec.graph();
        std::cout << "graph ok: dim " << g.dim() << ", " << g.generators().size() << " generators\n";
        if (!v_out.empty()) dump(v_out, write_graph_spec(spec));
        ++checked;
      }
      if (!v_set.empty()) {
        auto s = from_file(v_set, [](const std::string& t) { return read_lattice_set(t); });
        std::cout << "set ok: dim " << s.dim() << ", " << s.size() << " points\n";
        ++checked;
      }
      if (!v_poly.empty()) {
        auto p = from_file(v_poly, read_polytope);
        std::cout << "polytope ok: dim " << p.dim() << ", " << p.vertices().size() << " vertices\n";
        ++checked;
      }
      if (!v_zono.empty()) {
        auto z = from_file(v_zono, read_zonotope);
        std::cout << "zonotope ok: dim " << z.dim() << ", " << z.generators().size() << " generators\n";
        ++checked;
      }
      if (!checked) throw Error(ErrorKind::InvalidArgument, "nothing to validate");
    } else if (*boundary) {
      const auto g = b_graph.load().graph();
      auto s = from_file(b_set, [&](const std::string& t) { return read_lattice_set(t, g.dim()); });
      const auto r = boundary_identity_report(g, s);
      std::cout << r.direct_count << '\n';
      std::cout << "generator\tprojection\tgap\n";
      for (std::size_t i = 0; i < r.per_generator.size(); ++i) {
        std::cout << format_point(g.generators()[i]) << '\t' << r.per_generator[i].projection_count << '\t'
                  << r.per_generator[i].gap_count << '\n';
      }
      std::cout << "identity " << (r.identity_holds ? "holds" : "FAILS") << ": 2 * sum = " << r.identity_rhs()
                << '\n';
      if (!r.identity_holds) return 1;
    } else if (*zono) {
      const auto spec = z_graph.load();
      const Zonotope z = reporting_zonotope(spec, z_chart);
      const Polytope p = zonotope_polytope(z);
      if (z_fvector) {
        const auto f = f_vector(p).counts;
        for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? " " : "") << f[i];
        std::cout << '\n';
      }
      if (z_volume) std::cout << format_rational(zonotope_volume(z)) << '\n';
      if (z_boundary) {
        const auto b = continuous_boundary(p, z);
        std::cout << "b(Z) = " << format_rational(b.value) << ", n vol(Z) = "
                  << format_rational(Rational(static_cast<long>(z.dim())) * zonotope_volume(z)) << '\n';
      }
      if (z_generators) std::cout << write_zonotope(z);
      if (z_hrep || z_vertices) {
        const std::string text = write_polytope(p);
        if (z_hrep) {
          std::cout << text;
        } else {
          // Vertex block only.
          const auto h = text.find("\nH");
          std::cout << (h == std::string::npos ? text : text.substr(0, h + 1));
        }
      }
      if (!z_render.empty()) render_to_file(p, z_render);
      if (!z_out.empty()) dump(z_out, write_polytope(p));
    } else if (*search) {
      const auto spec = s_graph.load();
      const auto g = spec.graph();
      SearchOptions opt;
      opt.witness_cap = s_cap;
      opt.connected_only = s_connected;
      opt.threads = s_threads;
      if (s_symmetry) opt.symmetries = spec.symmetry_hints;
      if (s_limiting) {
        const auto rows = limiting_shape_report(g, s_limiting, s_radius, opt);
        const std::string tsv = limiting_shape_report_tsv(rows);
        s_out.empty() ? void(std::cout << tsv) : dump(s_out, tsv);
      } else {
        if (!s_m) throw Error(ErrorKind::InvalidArgument, "--m or --limiting is required");
        const auto r = s_heuristic ? local_search_min_boundary(g, s_m, s_iterations, s_seed, opt)
                                   : exhaustive_min_boundary(g, s_m, s_radius, opt);
        const std::string tsv = search_report_tsv(r);
        s_out.empty() ? void(std::cout << tsv) : dump(s_out, tsv);
        if (!s_witnesses.empty()) write_witnesses(s_witnesses, r.witnesses);
      }
    } else if (*section) {
      const auto spec = c_graph.load();
      const Zonotope z = build_zonotope(spec.graph());
      const Polytope q = hyperplane_section(z, axis_index(c_axis, z.dim()), parse_rational(c_level));
      std::cout << "vertices: " << q.vertices().size() << '\n';
      if (auto lower = lower_family(spec.name)) {
        const Polytope zl = zonotope_polytope(build_zonotope(builtin_graph(*lower).graph()));
        const auto h = homothety_check(zl, q);
        std::cout << "homothetic to Z_" << z.dim() - 1 << ": "
                  << (h ? "yes (scale " + format_rational(h->scale) + ")" : std::string("no")) << '\n';
      }
      if (!c_render.empty()) render_to_file(q, c_render);
      if (!c_out.empty()) dump(c_out, write_polytope(q));
    } else if (*converge) {
      const auto g = g_graph.load().graph();
      const std::string tsv = convergence_report_tsv(convergence_experiment(g, parse_rational_list(g_alphas)));
      g_out.empty() ? void(std::cout << tsv) : dump(g_out, tsv);
    } else if (*render_cmd) {
      if (!r_poly.empty() && r_graph.given()) throw Error(ErrorKind::InvalidArgument, "give --polytope or a graph");
      const Polytope p = !r_poly.empty() ? from_file(r_poly, read_polytope)
                                         : zonotope_polytope(reporting_zonotope(r_graph.load(), false));
      render_to_file(p, r_out);
    } else if (*reproduce) {
      if (p_only.empty()) {
        for (int i = 1; i <= 11; ++i) p_only.push_back(i);
      }
      bool all = true;
      for (int id : p_only) {
        const auto r = regression::run_criterion(id);
        std::cout << regression::summary_line(r) << '\n';
        for (const auto& line : r.checks) {
          if (p_verbose || line.rfind("FAIL", 0) == 0) std::cout << "    " << line << '\n';
        }
        std::cout.flush();
        all = all && r.passed;
      }
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
