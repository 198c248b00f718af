// Acceptance gate: one PASS/FAIL/SKIP line per criterion.
//
//   acceptance            run every criterion
//   acceptance N [N...]   run the listed criteria
//
// Exit status: 0 when nothing failed and something passed, 77 when every
// selected criterion was skipped, 1 on any failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "qclique/bench.hpp"
#include "support/family.hpp"
#include "support/graphs.hpp"

using namespace qclique;
using namespace qclique::testing;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

/// Collects the first few mismatches of a criterion.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + describe();
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {Verdict::Pass, summary + ", " + std::to_string(checks_) + " checks"};
    return {Verdict::Fail, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + notes_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

struct SuiteGraph {
  Graph graph;
  std::string label;
};

/// 200 seeded graphs, n in 5..12, p in {0.2, 0.4, 0.6}.
std::vector<SuiteGraph> random_suite() {
  std::mt19937_64 rng(20240601);
  const double densities[] = {0.2, 0.4, 0.6};
  std::vector<SuiteGraph> out;
  for (int i = 0; i < 200; ++i) {
    const Vertex n = 5 + static_cast<Vertex>(i % 8);
    const double p = densities[(i / 8) % 3];
    out.push_back({random_graph(n, p, rng), "graph " + std::to_string(i) + " (n=" + std::to_string(n) + ")"});
  }
  return out;
}

std::string status_pair(const Solution& a, const Solution& b) {
  return to_string(a.status) + " " + std::to_string(a.objective) + " vs " + to_string(b.status) + " " +
         std::to_string(b.objective);
}

std::optional<BackendConfig> find_backend() {
  BackendConfig cfg = BackendConfig::from_environment();
  if (cfg.command.empty() && std::system("python3 -c 'import scipy.optimize' >/dev/null 2>&1") == 0) {
    cfg.command = "python3 " QCLIQUE_SOURCE_DIR "/tools/scipy_backend.py {model} {solution} {timelimit}";
  }
  if (cfg.command.empty()) return std::nullopt;
  cfg.time_limit = 600;
  return cfg;
}

std::optional<std::filesystem::path> find_polbooks() {
  if (const char* env = std::getenv("QCLIQUE_POLBOOKS"); env && *env) return std::filesystem::path(env);
  const std::filesystem::path bundled = QCLIQUE_SOURCE_DIR "/tests/data/polbooks.mtx";
  if (std::filesystem::exists(bundled)) return bundled;
  return std::nullopt;
}

// --------------------------------------------------------------- criteria

Outcome oracle_equivalence() {
  Tally t;
  const Rational gammas[] = {Rational(3, 10), Rational(1, 2), Rational(7, 10), Rational(9, 10)};
  for (const SuiteGraph& sg : random_suite()) {
    const Graph& g = sg.graph;
    std::vector<ProblemSpec> specs;
    for (const Rational& gamma : gammas) {
      specs.push_back({MaxQuasiClique{gamma}, Connectivity::None, std::nullopt});
      specs.push_back({MaxQuasiClique{gamma}, Connectivity::CSTree, std::nullopt});
    }
    for (int k = 2; k <= g.num_vertices(); ++k) {
      specs.push_back({DensestSubgraph{k}, Connectivity::None, std::nullopt});
      specs.push_back({DensestSubgraph{k}, Connectivity::CFlow, std::nullopt});
    }
    for (const ProblemSpec& spec : specs) {
      const Solution truth = brute_force(g, spec);
      const Solution found = branch_and_bound(g, spec);
      t.check(found.status == truth.status && found.objective == truth.objective,
              [&] { return sg.label + " " + spec.describe() + ": " + status_pair(found, truth); });
    }
  }
  return t.outcome("200 graphs");
}

Outcome connectivity_equivalence() {
  Tally t;
  std::size_t subsets = 0;
  for (Vertex n = 1; n <= 5; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned gmask = 0; gmask < (1U << pairs); ++gmask) {
      const Graph g = graph_from_mask(n, gmask);
      for (unsigned smask = 1; smask < (1U << n); ++smask) {
        const VertexSet s = subset_from_mask(n, smask);
        const bool connected = is_connected(g, s);
        const int size = static_cast<int>(s.size());
        ++subsets;
        auto where = [&](const char* family) {
          return std::string(family) + " n=" + std::to_string(n) + " edges=" + std::to_string(gmask) +
                 " set=" + std::to_string(smask);
        };

        // Spanning-tree rows on the quasi-clique model, with gamma at the
        // set's own density so the base rows hold.
        const Rational gamma = connected ? density(g, s) : Rational(1);
        Formulation tree = build_f3(g, gamma, 1, n);
        add_cstree(tree, g, n);
        if (connected) {
          const auto cert = build_certificate(g, s, Connectivity::CSTree, n);
          Assignment a = indicator_assignment(tree, g, s);
          if (cert) apply_certificate(*cert, tree.layout, a);
          t.check(cert && evaluate(tree.model, a).feasible, [&] { return where("cstree certificate"); });
        } else {
          t.check(!family_admits(tree, g, s, kTreePrefix), [&] { return where("cstree completion"); });
        }

        // Flow rows need k = |S| >= 2.
        if (size < 2) continue;
        Formulation flow = build_m1(g, size);
        add_cflow(flow, g, size);
        if (connected) {
          const auto cert = build_certificate(g, s, Connectivity::CFlow, size);
          Assignment a = indicator_assignment(flow, g, s);
          if (cert) apply_certificate(*cert, flow.layout, a);
          t.check(cert && evaluate(flow.model, a).feasible, [&] { return where("cflow certificate"); });
        } else {
          t.check(!exists_completion(flow.model, base_values(flow, g, s)), [&] { return where("cflow completion"); });
        }
      }
    }
  }
  return t.outcome(std::to_string(subsets) + " graph/subset pairs");
}

Outcome disconnected_optimum() {
  Tally t;
  const Graph g = two_k4s_with_path();
  const auto backend = find_backend();
  if (!backend) return {Verdict::Fail, "no external backend for the CFlow, CSTree and MPR models"};
  const VertexSet split({0, 1, 2, 3, 4, 5, 6, 7}, 11);

  const ProblemSpec dks{DensestSubgraph{8}, Connectivity::None, std::nullopt};
  for (const Solution& s : {brute_force(g, dks), branch_and_bound(g, dks), solve_with_backend(g, dks, *backend)}) {
    t.check(s.objective == 12 && !is_connected(g, s.vertices), [&] { return "DKS " + std::to_string(s.objective); });
  }

  std::map<std::string, Solution> dcks;
  dcks["cflow"] = solve_with_backend(g, {DensestSubgraph{8}, Connectivity::CFlow, std::nullopt}, *backend);
  dcks["cstree"] = solve_with_backend(g, {DensestSubgraph{8}, Connectivity::CSTree, std::nullopt}, *backend);
  dcks["lazy"] = solve_lazy(g, 8);
  LazyOptions external;
  external.backend = backend;
  dcks["lazy+backend"] = solve_lazy(g, 8, external);
  dcks["bnb"] = branch_and_bound(g, {DensestSubgraph{8}, Connectivity::CFlow, std::nullopt});
  dcks["brute force"] = brute_force(g, {DensestSubgraph{8}, Connectivity::CFlow, std::nullopt});
  for (const auto& [engine, s] : dcks) {
    t.check(s.status == SolveStatus::Optimal && s.objective == 10 && is_connected(g, s.vertices),
            [&] { return "DCKS " + engine + " " + std::to_string(s.objective); });
  }

  const ProblemSpec mqc{MaxQuasiClique{Rational(3, 7)}, Connectivity::None, std::nullopt};
  for (const Solution& s : {brute_force(g, mqc), branch_and_bound(g, mqc), solve_with_backend(g, mqc, *backend)}) {
    t.check(s.objective == 8 && !is_connected(g, s.vertices), [&] { return "MQC " + std::to_string(s.objective); });
  }
  t.check(density(g, split) == Rational(3, 7), [] { return "density of the two K4s"; });

  std::map<std::string, Solution> mcqc;
  mcqc["mpr"] = solve_with_backend(g, {MaxQuasiClique{Rational(3, 7)}, Connectivity::MPR, std::nullopt}, *backend);
  mcqc["cstree"] = solve_with_backend(g, {MaxQuasiClique{Rational(3, 7)}, Connectivity::CSTree, std::nullopt}, *backend);
  mcqc["bnb"] = branch_and_bound(g, {MaxQuasiClique{Rational(3, 7)}, Connectivity::CSTree, std::nullopt});
  mcqc["brute force"] = brute_force(g, {MaxQuasiClique{Rational(3, 7)}, Connectivity::CSTree, std::nullopt});
  for (const auto& [engine, s] : mcqc) {
    t.check(s.status == SolveStatus::Optimal && s.objective == 7 && is_connected(g, s.vertices),
            [&] { return "MCQC " + engine + " " + std::to_string(s.objective); });
  }
  return t.outcome("DKS 12 split, DCKS 10, MQC 8 split, MCQC 7");
}

Outcome model_sizes() {
  Tally t;
  std::mt19937_64 rng(77);
  for (int round = 0; round < 50; ++round) {
    const Vertex n = 3 + static_cast<Vertex>(rng() % 30);
    const Graph g = random_graph(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng);
    const std::size_t V = static_cast<std::size_t>(n);
    const std::size_t E = g.num_edges();
    const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const SizeBounds b = default_bounds(g, Rational(1, 2));
    const std::size_t Z = static_cast<std::size_t>(b.upper - b.lower + 1);
    auto expect = [&](const char* name, const Formulation& f, std::size_t vars, std::size_t rows) {
      t.check(f.model.num_variables() == vars && f.model.num_constraints() == rows, [&] {
        return std::string(name) + " n=" + std::to_string(V) + " m=" + std::to_string(E) + ": " +
               std::to_string(f.model.num_variables()) + "/" + std::to_string(f.model.num_constraints());
      });
    };
    auto spec = [&](Connectivity c, bool quasi) {
      return quasi ? ProblemSpec{MaxQuasiClique{Rational(1, 2)}, c, std::nullopt}
                   : ProblemSpec{DensestSubgraph{k}, c, std::nullopt};
    };
    expect("M1", build(g, spec(Connectivity::None, false)), V + E, 1 + 2 * E);
    expect("F3", build(g, spec(Connectivity::None, true)), V + E + Z, 3 + 2 * E);
    expect("F3+MPR", build(g, spec(Connectivity::MPR, true)), V + E + Z + V + E, 3 + 2 * E + 1 + 5 * V + 2 * E);
    expect("F3+CSTree", build(g, spec(Connectivity::CSTree, true)), V + E + Z + 2 * (2 * E + V),
           3 + 2 * E + 4 * V + 5 * E + 2);
    expect("M1+CSTree", build(g, spec(Connectivity::CSTree, false)), V + E + 2 * (2 * E + V),
           1 + 2 * E + 4 * V + 5 * E + 2);
    expect("M1+CFlow", build(g, spec(Connectivity::CFlow, false)), V + E + V + 2 * E, 1 + 2 * E + 2 * V + 2 * E + 1);
  }
  return t.outcome("50 graphs, 6 models each");
}

Outcome lazy_convergence() {
  Tally t;
  int rounds = 0;
  int worst = 0;
  int cells = 0;
  for (const SuiteGraph& sg : random_suite()) {
    const Graph& g = sg.graph;
    for (int k = 2; k <= g.num_vertices(); ++k) {
      const Solution truth = brute_force(g, {DensestSubgraph{k}, Connectivity::CFlow, std::nullopt});
      const Solution lazy = solve_lazy(g, k);
      ++cells;
      rounds += lazy.cut_rounds;
      worst = std::max(worst, lazy.cut_rounds);
      const bool ok = truth.status == SolveStatus::Infeasible
                          ? lazy.status == SolveStatus::Infeasible
                          : lazy.status == SolveStatus::Optimal && lazy.objective == truth.objective &&
                                is_connected(g, lazy.vertices);
      t.check(ok, [&] { return sg.label + " k=" + std::to_string(k) + ": " + status_pair(lazy, truth); });
    }
  }
  return t.outcome(std::to_string(cells) + " cells, " + std::to_string(rounds) + " cut rounds, at most " +
                   std::to_string(worst) + " per cell");
}

Outcome instance_table() {
  Tally t;
  t.check(format_density(Rational(2 * 441, 105 * 104)) == "0.08", [] { return "density rendering of 105/441"; });
  const auto path = find_polbooks();
  if (!path) return {Verdict::Skip, "Polbooks not found (set QCLIQUE_POLBOOKS or add tests/data/polbooks.mtx)"};
  const Graph g = load_graph(path->string());
  const std::string rendered = render_stats(instance_stats(g));
  t.check(rendered.starts_with("105 441 0.08\n"), [&] { return "stats printed " + rendered.substr(0, rendered.find('\n')); });
  return t.outcome("Polbooks 105 441 0.08");
}

Outcome polbooks_grid() {
  const auto path = find_polbooks();
  if (!path) return {Verdict::Skip, "Polbooks not found (set QCLIQUE_POLBOOKS or add tests/data/polbooks.mtx)"};
  Tally t;
  const Graph g = largest_component(load_graph(path->string())).graph;
  const auto backend = find_backend();
  // Keyed by the graph so an interrupted run resumes only its own cells.
  const std::string key = std::to_string(std::hash<std::string>{}(write_edge_list(g)));
  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  std::ostringstream summary;

  GridSpec spec;
  spec.engine = backend ? Engine::Backend : Engine::BranchAndBound;
  spec.backend = backend;
  spec.workers = 1;

  spec.instance = "Polbooks M1";
  spec.quasi_clique = false;
  spec.params = k_grid(g.num_vertices());
  const GridRow m1 = aggregate(spec.instance, run_grid(g, spec, dir / ("qclique_polbooks_m1_" + key + ".csv")));
  t.check(std::abs(m1.pct_disc - 6.8) <= 1.0, [&] { return render_row(m1); });

  spec.instance = "Polbooks F3";
  spec.quasi_clique = true;
  spec.params = gamma_grid();
  const GridRow f3 = aggregate(spec.instance, run_grid(g, spec, dir / ("qclique_polbooks_f3_" + key + ".csv")));
  t.check(std::abs(f3.pct_disc - 2.2) <= 1.0, [&] { return render_row(f3); });

  summary << render_row(m1) << " | " << render_row(f3) << " | engine " << to_string(spec.engine);
  return t.outcome(summary.str());
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "branch and bound equals brute force", oracle_equivalence},
    {2, "connectivity rows feasible iff connected", connectivity_equivalence},
    {3, "disconnected optima on the two-K4 graph", disconnected_optimum},
    {4, "model sizes match closed forms", model_sizes},
    {5, "lazy loop converges to connected optima", lazy_convergence},
    {6, "Polbooks instance statistics", instance_table},
    {7, "Polbooks disconnection percentages", polbooks_grid},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  int passed = 0, failed = 0, skipped = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Verdict::Fail, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* word = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Fail ? "FAIL" : "SKIP";
    (o.verdict == Verdict::Pass ? passed : o.verdict == Verdict::Fail ? failed : skipped)++;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    std::cout << word << " criterion " << c.id << " (" << c.name << "): " << o.detail << " [" << timing << "]"
              << std::endl;
  }
  if (failed > 0) return 1;
  return passed == 0 && skipped > 0 ? 77 : 0;
}
