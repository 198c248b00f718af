#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qclique/bench.hpp"

using namespace qclique;

namespace {

enum Exit { kSolved = 0, kBackendFailure = 1, kInfeasible = 2, kLimit = 3, kInputError = 4 };

/// Thrown for bad user input; reported with exit code 4.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  Graph graph;
  Vertex label_offset = 0;  // added to internal ids in output
};

Loaded load(const std::string& path, int base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  Loaded out;
  const bool matrix_market = first.starts_with("%%MatrixMarket");
  out.graph = parse_graph(in, base);
  out.label_offset = matrix_market ? 1 : base;
  return out;
}

std::string labels(const Loaded& l, const Graph& g, const VertexSet& s) {
  std::ostringstream out;
  bool first = true;
  for (Vertex v : s) {
    out << (first ? "" : " ") << g.original_id(v) + l.label_offset;
    first = false;
  }
  return out.str();
}

Rational parse_gamma(const std::string& text) {
  const auto value = parse_rational(text);
  if (!value) throw InputError("gamma is not a number: " + text);
  return *value;
}

struct ProblemOptions {
  std::string gamma;
  int k = 0;
  std::string mode = "none";

  void attach(CLI::App* app) {
    app->add_option("--gamma", gamma, "density threshold (decimal or p/q)");
    app->add_option("--k", k, "subgraph cardinality");
    app->add_option("--mode", mode, "connectivity: none, mpr, cstree, cflow, lazy")
        ->check(CLI::IsMember({"none", "mpr", "cstree", "cflow", "lazy"}));
  }

  ProblemSpec spec(const Graph& g) const {
    if (gamma.empty() == (k == 0)) throw InputError("give exactly one of --gamma and --k");
    ProblemSpec s;
    if (!gamma.empty()) {
      s.problem = MaxQuasiClique{parse_gamma(gamma)};
    } else {
      s.problem = DensestSubgraph{k};
    }
    s.connectivity = *parse_connectivity(mode);
    try {
      s.validate(g.num_vertices());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return s;
  }
};

struct SolverOptions {
  std::string engine = "bnb";
  double time_limit = 3600.0;
  double mem_limit_gb = 10.0;
  std::string backend_cmd;

  void attach(CLI::App* app) {
    app->add_option("--engine", engine, "bnb, backend or lazy")->check(CLI::IsMember({"bnb", "backend", "lazy"}));
    app->add_option("--time-limit", time_limit, "seconds")->check(CLI::PositiveNumber);
    app->add_option("--mem-limit", mem_limit_gb, "gigabytes")->check(CLI::PositiveNumber);
    app->add_option("--backend-cmd", backend_cmd, "backend command template (overrides QCLIQUE_BACKEND_CMD)");
  }

  SearchLimits limits() const {
    return SearchLimits{time_limit, static_cast<std::uint64_t>(mem_limit_gb * static_cast<double>(1ULL << 30))};
  }

  std::optional<BackendConfig> backend() const {
    BackendConfig cfg = BackendConfig::from_environment();
    if (!backend_cmd.empty()) cfg.command = backend_cmd;
    if (cfg.command.empty()) return std::nullopt;
    cfg.time_limit = time_limit;
    return cfg;
  }

  Engine parsed_engine() const { return *parse_engine(engine); }
};

void write_file(const std::string& path, const ExportResult& r) {
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << '\n';
  if (path == "-") {
    std::cout << r.text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << r.text;
}

int run_stats(const std::string& path, int base) {
  const Loaded l = load(path, base);
  std::cout << render_stats(instance_stats(l.graph));
  return kSolved;
}

int run_emit(const std::string& path, int base, const ProblemOptions& problem, const std::string& lp,
             const std::string& mps) {
  const Loaded l = load(path, base);
  const Formulation f = build(l.graph, problem.spec(l.graph));
  if (lp.empty() && mps.empty()) {
    write_file("-", export_lp(f.model));
    return kSolved;
  }
  if (!lp.empty()) write_file(lp, export_lp(f.model));
  if (!mps.empty()) write_file(mps, export_mps(f.model));
  return kSolved;
}

int run_solve(const std::string& path, int base, const ProblemOptions& problem, const SolverOptions& solver,
              bool certify) {
  const Loaded l = load(path, base);
  const Graph& g = l.graph;
  const ProblemSpec spec = problem.spec(g);
  const Engine engine = solver.parsed_engine();

  Solution sol;
  const bool lazy = engine == Engine::Lazy || spec.connectivity == Connectivity::Lazy;
  if (lazy) {
    if (spec.is_quasi_clique()) throw InputError("the lazy loop needs --k");
    LazyOptions options;
    options.limits = solver.limits();
    if (engine == Engine::Backend) {
      options.backend = solver.backend();
      if (!options.backend) throw InputError("no backend command; set QCLIQUE_BACKEND_CMD or --backend-cmd");
    }
    sol = solve_lazy(g, spec.k(), options);
  } else if (engine == Engine::Backend) {
    const auto cfg = solver.backend();
    if (!cfg) throw InputError("no backend command; set QCLIQUE_BACKEND_CMD or --backend-cmd");
    sol = solve_with_backend(g, spec, *cfg);
  } else {
    sol = branch_and_bound(g, spec, solver.limits());
  }

  if (sol.vertices.empty()) {
    std::cout << "no feasible set, " << to_string(sol.status) << '\n';
  } else {
    const bool connected = is_connected(g, sol.vertices);
    std::cout << (spec.is_quasi_clique() ? "size " + std::to_string(sol.objective)
                                         : std::to_string(sol.objective) + " edges")
              << ", " << (connected ? "connected" : "disconnected") << ", " << to_string(sol.status) << '\n';
    std::cout << "vertices: " << labels(l, g, sol.vertices) << '\n';
    std::cout << "density: " << format_fraction(density(g, sol.vertices)) << '\n';
    if (certify && spec.requires_connected() && connected) {
      const CertificateCheck check = check_certificate(g, spec, sol.vertices);
      std::cout << "certificate: " << (check.feasible ? "verified" : "failed") << " (" << check.detail << ")\n";
      if (check.applicable && !check.feasible) return kBackendFailure;
    }
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", sol.elapsed);
  std::cout << "elapsed: " << elapsed << " s, nodes: " << sol.nodes_explored;
  if (lazy) std::cout << ", cut rounds: " << sol.cut_rounds;
  std::cout << '\n';

  switch (sol.status) {
    case SolveStatus::Optimal:
      return kSolved;
    case SolveStatus::Infeasible:
      return kInfeasible;
    case SolveStatus::TimeLimit:
    case SolveStatus::MemoryLimit:
      return kLimit;
  }
  return kSolved;
}

int run_grid(const std::string& path, int base, const std::string& family, const std::string& mode,
             const SolverOptions& solver, int workers, const std::string& csv, std::string name, bool markdown) {
  const Loaded l = load(path, base);
  const ComponentResult lc = largest_component(l.graph);
  const Graph& g = lc.graph;
  if (name.empty()) name = std::filesystem::path(path).stem().string();
  std::cerr << "largest component " << g.num_vertices() << " of " << l.graph.num_vertices() << '\n';

  GridSpec spec;
  spec.instance = name;
  spec.quasi_clique = family == "mqc";
  spec.params = spec.quasi_clique ? gamma_grid() : k_grid(g.num_vertices());
  if (spec.params.empty()) throw InputError("empty parameter grid");
  spec.mode = *parse_connectivity(mode);
  spec.engine = solver.parsed_engine();
  spec.limits = solver.limits();
  spec.backend = solver.backend();
  spec.workers = workers;
  if (spec.engine == Engine::Backend && !spec.backend) {
    throw InputError("no backend command; set QCLIQUE_BACKEND_CMD or --backend-cmd");
  }

  const std::vector<GridCell> cells = qclique::run_grid(g, spec, csv);
  const GridRow row = aggregate(name, cells);
  std::cout << (markdown ? render_markdown({row}) : render_row(row) + "\n");
  return kSolved;
}

int run_verify(const std::string& path, int base, const std::vector<std::string>& vertex_labels,
               const std::string& gamma, int k) {
  const Loaded l = load(path, base);
  const Graph& g = l.graph;
  std::vector<Vertex> members;
  for (const std::string& group : vertex_labels) {
    std::string item;
    std::istringstream split(group);
    while (std::getline(split, item, ',')) {
      if (item.empty()) continue;
      long long label = 0;
      try {
        std::size_t used = 0;
        label = std::stoll(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw InputError("invalid vertex label: " + item);
      }
      const long long id = label - l.label_offset;
      if (id < 0 || id >= g.num_vertices()) throw InputError("vertex label out of range: " + item);
      members.push_back(static_cast<Vertex>(id));
    }
  }
  VertexSet s;
  try {
    s = VertexSet(members, g.num_vertices());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (s.empty()) throw InputError("no vertices given");
  VerifyRequest request;
  if (!gamma.empty()) request.gamma = parse_gamma(gamma);
  if (k > 0) request.k = k;
  std::cout << verify_report(g, s, request);
  return kSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quasi-clique and densest-subgraph solver"};
  app.require_subcommand(1);
  int base = 0;
  app.add_option("--base", base, "first vertex label in edge-list files (0 or 1)")->check(CLI::Range(0, 1));

  std::string path;
  ProblemOptions problem;
  SolverOptions solver;

  auto* stats = app.add_subcommand("stats", "instance size, density and largest component");
  stats->add_option("graph", path, "Matrix Market or edge-list file")->required();

  auto* emit = app.add_subcommand("emit", "write the model without solving (LP to stdout by default)");
  std::string emit_lp;
  std::string emit_mps;
  emit->add_option("graph", path)->required();
  problem.attach(emit);
  emit->add_option("--emit-lp", emit_lp, "LP output path ('-' for stdout)");
  emit->add_option("--emit-mps", emit_mps, "MPS output path ('-' for stdout)");

  auto* solve = app.add_subcommand("solve", "solve one instance");
  bool certify = false;
  std::string solve_lp;
  std::string solve_mps;
  solve->add_option("graph", path)->required();
  problem.attach(solve);
  solver.attach(solve);
  solve->add_option("--emit-lp", solve_lp, "write the LP model and exit");
  solve->add_option("--emit-mps", solve_mps, "write the MPS model and exit");
  solve->add_flag("--certify", certify, "re-check connected answers with an explicit flow certificate");

  auto* grid = app.add_subcommand("grid", "parameter sweep on the largest component");
  std::string family = "mqc";
  std::string grid_mode = "none";
  int workers = 1;
  std::string csv;
  std::string name;
  bool markdown = false;
  grid->add_option("graph", path)->required();
  grid->add_option("--problem", family, "mqc (gamma grid) or dks (k grid)")->check(CLI::IsMember({"mqc", "dks"}));
  grid->add_option("--mode", grid_mode)->check(CLI::IsMember({"none", "mpr", "cstree", "cflow", "lazy"}));
  solver.attach(grid);
  grid->add_option("--workers", workers)->check(CLI::PositiveNumber);
  grid->add_option("--csv", csv, "per-cell CSV; existing rows are reused")->required();
  grid->add_option("--name", name, "instance name in the summary row");
  grid->add_flag("--markdown", markdown, "print the summary as a Markdown table");

  auto* verify = app.add_subcommand("verify", "check a given vertex set");
  std::vector<std::string> vertex_labels;
  std::string verify_gamma;
  int verify_k = 0;
  verify->add_option("graph", path)->required();
  verify->add_option("vertices", vertex_labels, "vertex labels, space or comma separated")->required();
  verify->add_option("--gamma", verify_gamma);
  verify->add_option("--k", verify_k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*stats) return run_stats(path, base);
    if (*emit) return run_emit(path, base, problem, emit_lp, emit_mps);
    if (*solve) {
      if (!solve_lp.empty() || !solve_mps.empty()) return run_emit(path, base, problem, solve_lp, solve_mps);
      return run_solve(path, base, problem, solver, certify);
    }
    if (*grid) return run_grid(path, base, family, grid_mode, solver, workers, csv, name, markdown);
    if (*verify) return run_verify(path, base, vertex_labels, verify_gamma, verify_k);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kInputError;
  } catch (const BackendError& e) {
    std::cerr << "backend " << to_string(e.status()) << ": " << e.what() << '\n';
    return kBackendFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBackendFailure;
  }
  return kSolved;
}
