#include <algorithm>
#include <chrono>
#include <set>

#include "qclique/solver.hpp"

namespace qclique {

namespace {

Solution solve_round(const Graph& g, const ProblemSpec& relaxed, const std::vector<LazyCut>& cuts,
                     const LazyOptions& options, double remaining) {
  if (!options.backend) {
    SearchLimits limits = options.limits;
    limits.time_limit = remaining;
    return branch_and_bound(g, relaxed, limits, cuts);
  }
  Formulation f = build(g, relaxed);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    f.model.add_constraint(lazy_cut_row(cuts[i], f.layout, std::string(kLazyPrefix) + std::to_string(i)));
  }
  BackendConfig cfg = *options.backend;
  cfg.time_limit = std::min(cfg.time_limit, remaining);
  const ExternalResult r = solve_external(f.model, cfg);
  Solution sol;
  sol.elapsed = r.elapsed;
  switch (r.status) {
    case ExternalStatus::Solved:
      sol.status = SolveStatus::Optimal;
      break;
    case ExternalStatus::Infeasible:
      sol.status = SolveStatus::Infeasible;
      return sol;
    case ExternalStatus::TimeLimit:
      sol.status = SolveStatus::TimeLimit;
      break;
    default:
      throw BackendError(r.status, r.message);
  }
  if (r.assignment) {
    try {
      sol.vertices = extract_vertex_set(f.layout, *r.assignment, Rational(cfg.integrality_tolerance));
    } catch (const std::domain_error& e) {
      throw BackendError(ExternalStatus::ValidationFailure, e.what());
    }
    sol.objective = objective_of(g, relaxed, sol.vertices);
  }
  return sol;
}

}  // namespace

Solution solve_lazy(const Graph& g, int k, const LazyOptions& options) {
  const ProblemSpec relaxed{DensestSubgraph{k}, Connectivity::None, std::nullopt};
  relaxed.validate(g.num_vertices());
  const auto start = std::chrono::steady_clock::now();
  std::vector<LazyCut> cuts;
  std::set<LazyCut> seen;
  std::uint64_t nodes = 0;
  for (int round = 0;; ++round) {
    const double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Solution sol = solve_round(g, relaxed, cuts, options, std::max(0.0, options.limits.time_limit - spent));
    nodes += sol.nodes_explored;
    sol.nodes_explored = nodes;
    sol.cut_rounds = round;
    sol.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (sol.status != SolveStatus::Optimal) {
      // A limit hit mid-loop leaves no connected incumbent to report.
      if (sol.status != SolveStatus::Infeasible && !is_connected(g, sol.vertices)) sol.vertices = VertexSet();
      if (sol.vertices.empty()) sol.objective = 0;
      return sol;
    }
    std::vector<LazyCut> fresh;
    for (LazyCut& cut : lazy_cuts(g, sol.vertices, k)) {
      if (seen.insert(cut).second) fresh.push_back(std::move(cut));
    }
    if (fresh.empty()) {
      if (!is_connected(g, sol.vertices)) throw std::logic_error("lazy loop stalled on a disconnected set");
      return sol;
    }
    cuts.insert(cuts.end(), fresh.begin(), fresh.end());
  }
}

}  // namespace qclique
