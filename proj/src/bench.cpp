#include "qclique/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace qclique {

// ------------------------------------------------------------------ stats

InstanceStats instance_stats(const Graph& g) {
  InstanceStats s;
  s.vertices = g.num_vertices();
  s.edges = g.num_edges();
  s.density = s.vertices > 0 ? density(g, VertexSet::all(s.vertices)) : Rational(0);
  s.largest_component = largest_component(g).graph.num_vertices();
  return s;
}

std::string format_density(const Rational& d) {
  if (d < Rational(1, 200)) return "<0.01";
  const Rational scaled = d * 100 + Rational(1, 2);
  const BigInt hundredths = numerator(scaled) / denominator(scaled);  // floor, as d > 0
  const std::string digits = hundredths.str();
  const std::string padded = std::string(digits.size() < 3 ? 3 - digits.size() : 0, '0') + digits;
  return padded.substr(0, padded.size() - 2) + "." + padded.substr(padded.size() - 2);
}

std::string render_stats(const InstanceStats& s) {
  std::ostringstream out;
  out << s.vertices << ' ' << s.edges << ' ' << (s.vertices > 0 ? format_density(s.density) : "n/a") << '\n';
  out << "largest component " << s.largest_component << " of " << s.vertices << '\n';
  return out.str();
}

// ------------------------------------------------------------ certificates

namespace {

int certificate_bound(const Formulation& f) {
  if (f.layout.has_flow() || f.layout.base == BaseModel::M1) return f.layout.k;
  return f.layout.size_bounds.upper;
}

/// Evaluates indicator + certificate; `prefix` limits which violations count.
CertificateCheck evaluate_certificate(const Formulation& f, const Graph& g, const VertexSet& s, Connectivity mode,
                                      std::string_view prefix) {
  CertificateCheck check;
  const int bound = certificate_bound(f);
  if (s.empty() || static_cast<int>(s.size()) > bound || (mode == Connectivity::CFlow && static_cast<int>(s.size()) != bound)) {
    check.detail = "not applicable";
    return check;
  }
  check.applicable = true;
  const auto cert = build_certificate(g, s, mode, bound);
  if (!cert) {
    check.detail = "disconnected, no certificate";
    return check;
  }
  check.built = true;
  Assignment a = indicator_assignment(f, g, s);
  apply_certificate(*cert, f.layout, a);
  const Evaluation e = evaluate(f.model, a);
  check.feasible = true;
  for (const Violation& v : e.violated) {
    if (std::string_view(v.tag).starts_with(prefix)) {
      check.feasible = false;
      check.detail = "rejected at " + v.tag;
      return check;
    }
  }
  check.detail = "certificate accepted (source " + std::to_string(g.original_id(cert->source)) + ")";
  return check;
}

}  // namespace

CertificateCheck check_certificate(const Graph& g, const ProblemSpec& spec, const VertexSet& s) {
  const Connectivity mode = spec.connectivity;
  if (mode != Connectivity::MPR && mode != Connectivity::CSTree && mode != Connectivity::CFlow) {
    return CertificateCheck{false, false, false, "mode " + to_string(mode) + " has no certificate"};
  }
  const Formulation f = build(g, spec);
  return evaluate_certificate(f, g, s, mode, "");
}

// ----------------------------------------------------------------- verify

std::string verify_report(const Graph& g, const VertexSet& s, const VerifyRequest& request) {
  if (s.empty()) throw std::invalid_argument("vertex set is empty");
  const Vertex n = g.num_vertices();
  const Rational d = density(g, s);
  const auto parts = components(g, s);
  const bool connected = parts.size() <= 1;
  std::ostringstream out;
  std::ostringstream summary;

  out << "vertices: " << s.size() << " of " << n << '\n';
  out << "edges: " << induced_edge_count(g, s) << '\n';
  out << "density: " << format_fraction(d) << " (" << format_decimal(d).text.substr(0, 8) << ")\n";

  std::vector<std::string> verdicts;
  if (request.gamma) {
    const Rational& gamma = *request.gamma;
    const bool ok = d >= gamma;
    std::string relation;
    if (d == gamma) {
      relation = "density = " + format_fraction(d) + " exactly";
    } else {
      relation = "density " + format_fraction(d) + (ok ? " > " : " < ") + format_fraction(gamma);
    }
    out << "gamma " << format_fraction(gamma) << ": " << relation << ", " << (ok ? "feasible" : "infeasible") << '\n';
    summary << relation << ", " << (ok ? "feasible" : "infeasible") << ", ";
  }
  if (request.k) {
    const bool ok = static_cast<int>(s.size()) == *request.k;
    out << "cardinality: " << s.size() << (ok ? " = k" : " != k = " + std::to_string(*request.k)) << '\n';
    summary << "size " << s.size() << (ok ? " = k" : " != k " + std::to_string(*request.k)) << ", ";
  }
  if (!request.gamma) summary << "density " << format_fraction(d) << ", ";
  out << "connected: " << (connected ? "yes" : "no, " + std::to_string(parts.size()) + " components") << '\n';
  summary << (connected ? "connected" : "disconnected");

  const int size = static_cast<int>(s.size());
  {
    Formulation tree = build_f3(g, Rational(1), 1, n);
    add_cstree(tree, g, n);
    out << "certificate cstree: " << evaluate_certificate(tree, g, s, Connectivity::CSTree, kTreePrefix).detail << '\n';
    Formulation mpr = build_f3(g, Rational(1), 1, n);
    add_mpr(mpr, g, n);
    out << "certificate mpr: " << evaluate_certificate(mpr, g, s, Connectivity::MPR, kMprPrefix).detail << '\n';
  }
  if (size >= 2 && (!request.k || *request.k == size)) {
    Formulation flow = build_m1(g, size);
    add_cflow(flow, g, size);
    out << "certificate cflow: " << evaluate_certificate(flow, g, s, Connectivity::CFlow, kFlowPrefix).detail << '\n';
  } else {
    out << "certificate cflow: not applicable\n";
  }
  out << "summary: " << summary.str() << '\n';
  return out.str();
}

// ------------------------------------------------------------------- grid

std::string to_string(Engine e) {
  switch (e) {
    case Engine::BranchAndBound:
      return "bnb";
    case Engine::Backend:
      return "backend";
    case Engine::Lazy:
      return "lazy";
  }
  return "bnb";
}

std::optional<Engine> parse_engine(std::string_view text) {
  if (text == "bnb") return Engine::BranchAndBound;
  if (text == "backend") return Engine::Backend;
  if (text == "lazy") return Engine::Lazy;
  return std::nullopt;
}

std::vector<Rational> gamma_grid() {
  std::vector<Rational> out;
  for (int i = 10; i <= 100; ++i) out.emplace_back(i, 100);
  return out;
}

std::vector<Rational> k_grid(Vertex n) {
  std::vector<Rational> out;
  for (Vertex k = 2; k <= n - 1; ++k) out.emplace_back(k);
  return out;
}

std::string format_cell(const GridCell& c) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", c.elapsed);
  std::ostringstream out;
  out << c.param << ',' << c.status << ',' << c.objective << ',' << (c.connected ? "true" : "false") << ',' << elapsed
      << ',' << c.nodes;
  return out.str();
}

GridCell parse_cell(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  fields.push_back(current);
  if (fields.size() != 6) throw std::runtime_error("grid row needs 6 fields: " + std::string(line));
  GridCell c;
  try {
    c.param = fields[0];
    c.status = fields[1];
    c.objective = std::stoll(fields[2]);
    if (fields[3] != "true" && fields[3] != "false") throw std::invalid_argument("connected flag");
    c.connected = fields[3] == "true";
    c.elapsed = std::stod(fields[4]);
    c.nodes = std::stoull(fields[5]);
  } catch (const std::exception&) {
    throw std::runtime_error("malformed grid row: " + std::string(line));
  }
  return c;
}

std::vector<GridCell> read_grid_csv(const std::filesystem::path& path) {
  std::vector<GridCell> cells;
  std::ifstream in(path);
  if (!in) return cells;
  std::string line;
  if (!std::getline(in, line)) return cells;
  if (line != kGridHeader) throw std::runtime_error(path.string() + ": unexpected header '" + line + "'");
  while (std::getline(in, line)) {
    if (!line.empty()) cells.push_back(parse_cell(line));
  }
  return cells;
}

GridCell solve_cell(const Graph& g, const GridSpec& spec, const Rational& param) {
  GridCell cell;
  cell.param = format_decimal(param).text;
  try {
    ProblemSpec problem;
    if (spec.quasi_clique) {
      problem.problem = MaxQuasiClique{param};
    } else {
      problem.problem = DensestSubgraph{static_cast<int>(numerator(param) / denominator(param))};
    }
    problem.connectivity = spec.mode;
    problem.validate(g.num_vertices());

    Solution sol;
    const bool lazy = spec.engine == Engine::Lazy || (spec.engine == Engine::Backend && spec.mode == Connectivity::Lazy);
    if (lazy) {
      if (spec.quasi_clique) throw std::invalid_argument("the lazy loop needs a densest-subgraph grid");
      LazyOptions options;
      options.limits = spec.limits;
      if (spec.engine == Engine::Backend) options.backend = spec.backend;
      sol = solve_lazy(g, problem.k(), options);
    } else if (spec.engine == Engine::Backend) {
      if (!spec.backend) throw std::invalid_argument("no backend configured");
      BackendConfig cfg = *spec.backend;
      cfg.time_limit = spec.limits.time_limit;
      sol = solve_with_backend(g, problem, cfg);
    } else {
      sol = branch_and_bound(g, problem, spec.limits);
    }
    cell.status = to_string(sol.status);
    cell.objective = sol.objective;
    cell.connected = !sol.vertices.empty() && is_connected(g, sol.vertices);
    cell.elapsed = sol.elapsed;
    cell.nodes = sol.nodes_explored;
  } catch (const std::exception&) {
    cell.status = "Error";
  }
  return cell;
}

std::vector<GridCell> run_grid(const Graph& g, const GridSpec& spec, const std::filesystem::path& csv) {
  const std::vector<GridCell> existing = read_grid_csv(csv);
  std::map<std::string, GridCell> known;
  for (const GridCell& c : existing) known.emplace(c.param, c);

  const std::size_t total = spec.params.size();
  std::vector<std::string> names(total);
  std::vector<std::optional<GridCell>> results(total);
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < total; ++i) {
    names[i] = format_decimal(spec.params[i]).text;
    if (auto it = known.find(names[i]); it != known.end()) {
      results[i] = it->second;
    } else {
      pending.push_back(i);
    }
  }

  // Files written here are always a prefix of the grid; append to those.
  bool prefix = existing.size() <= total;
  for (std::size_t i = 0; prefix && i < existing.size(); ++i) prefix = existing[i].param == names[i];

  std::size_t next_write = 0;
  std::ofstream out;
  if (prefix && !existing.empty()) {
    out.open(csv, std::ios::app);
    next_write = existing.size();
  } else {
    out.open(csv, std::ios::trunc);
    out << kGridHeader << '\n';
  }
  if (!out) throw std::runtime_error("cannot write " + csv.string());

  std::mutex lock;
  auto flush_ready = [&] {
    while (next_write < total && results[next_write]) {
      out << format_cell(*results[next_write]) << '\n';
      ++next_write;
    }
    out.flush();
  };
  flush_ready();

  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t j = cursor++; j < pending.size(); j = cursor++) {
      const std::size_t i = pending[j];
      GridCell cell = solve_cell(g, spec, spec.params[i]);
      std::lock_guard<std::mutex> guard(lock);
      results[i] = std::move(cell);
      flush_ready();
    }
  };
  const int workers = std::max(1, spec.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  out.close();
  return read_grid_csv(csv);
}

GridRow aggregate(const std::string& instance, const std::vector<GridCell>& cells) {
  GridRow row;
  row.instance = instance;
  row.cells = cells.size();
  std::vector<double> times;
  for (const GridCell& c : cells) {
    const bool optimal = c.status == "Optimal";
    if (optimal || c.status == "Infeasible") {
      ++row.solved;
      times.push_back(c.elapsed);
    }
    if (optimal) {
      ++row.optimal;
      if (!c.connected) ++row.disconnected;
    }
  }
  if (row.cells > 0) row.pct_succ = 100.0 * static_cast<double>(row.solved) / static_cast<double>(row.cells);
  if (row.optimal > 0) row.pct_disc = 100.0 * static_cast<double>(row.disconnected) / static_cast<double>(row.optimal);
  if (!times.empty()) {
    double sum = 0;
    for (double t : times) sum += t;
    row.runtime_mean = sum / static_cast<double>(times.size());
    if (times.size() > 1) {
      double sq = 0;
      for (double t : times) sq += (t - row.runtime_mean) * (t - row.runtime_mean);
      row.runtime_sd = std::sqrt(sq / static_cast<double>(times.size() - 1));
    }
  }
  return row;
}

std::string render_row(const GridRow& row) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, "%s  %.1f  %.1f  %.1f ± %.1f", row.instance.c_str(), row.pct_succ, row.pct_disc,
                row.runtime_mean, row.runtime_sd);
  return buffer;
}

std::string render_markdown(const std::vector<GridRow>& rows) {
  std::ostringstream out;
  out << "| Graph | %succ | %disc | run-time |\n|---|---:|---:|---:|\n";
  for (const GridRow& r : rows) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, "| %s | %.1f | %.1f | %.1f ± %.1f |\n", r.instance.c_str(), r.pct_succ, r.pct_disc,
                  r.runtime_mean, r.runtime_sd);
    out << buffer;
  }
  return out.str();
}

}  // namespace qclique
