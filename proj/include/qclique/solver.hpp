#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qclique/formulations.hpp"
#include "qclique/graph.hpp"
#include "qclique/model.hpp"

namespace qclique {

enum class SolveStatus { Optimal, TimeLimit, Infeasible, MemoryLimit };

std::string to_string(SolveStatus s);

struct Solution {
  VertexSet vertices;
  /// Vertex count for quasi-clique problems, induced edge count for
  /// densest-subgraph problems. Always recomputed from `vertices`.
  long long objective = 0;
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Certificate> certificate;
  double elapsed = 0.0;  // seconds
  std::uint64_t nodes_explored = 0;
  int cut_rounds = 0;    // lazy loop only
};

struct SearchLimits {
  double time_limit = 3600.0;                    // seconds
  std::uint64_t memory_limit = 10ULL << 30;      // bytes
};

/// Objective of `s` under the spec: |s| or |E(G_s)|.
long long objective_of(const Graph& g, const ProblemSpec& spec, const VertexSet& s);

/// True when `s` is feasible for the spec (density / cardinality and, for
/// connected variants, connectedness).
bool is_feasible(const Graph& g, const ProblemSpec& spec, const VertexSet& s);

class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive oracle. Quasi-clique problems need n <= 25, densest-subgraph
/// problems C(n,k) <= 10^7. Ties go to the lexicographically smallest set.
Solution brute_force(const Graph& g, const ProblemSpec& spec);

/// Include/exclude search over vertices in descending degree order with
/// density and reachability bounds. Ties go to the lexicographically
/// smallest set, so on small instances the result matches brute_force.
/// `cuts` restrict densest-subgraph searches further (used by the lazy loop).
Solution branch_and_bound(const Graph& g, const ProblemSpec& spec, const SearchLimits& limits = {},
                          const std::vector<LazyCut>& cuts = {});

/// Greedy seed: grow from every start vertex by the vertex with the most
/// edges into the current set (only through the boundary for connected
/// variants) and keep the best feasible prefix. Returns nullopt if none.
std::optional<VertexSet> greedy_start(const Graph& g, const ProblemSpec& spec);

/// Repeatedly drops a minimum-degree vertex and returns the largest
/// feasible set seen along the way.
std::optional<VertexSet> peel_start(const Graph& g, const ProblemSpec& spec);

// ---------------------------------------------------------------- backends

enum class ModelFormat { LP, MPS };

struct BackendConfig {
  /// Shell command with {model}, {solution} and {timelimit} placeholders.
  std::string command;
  ModelFormat format = ModelFormat::MPS;
  double time_limit = 3600.0;
  /// Where the backend writes its answer; a temporary file when empty.
  std::string solution_path;
  /// Extra wall time granted to the process beyond time_limit before it is killed.
  double kill_grace = 5.0;
  /// Absolute per-row tolerance when validating returned assignments.
  double feasibility_tolerance = 1e-6;
  double integrality_tolerance = 1e-6;

  /// QCLIQUE_BACKEND_CMD, or empty when unset.
  static BackendConfig from_environment();
};

enum class ExternalStatus { Solved, TimeLimit, Infeasible, ProcessFailure, ValidationFailure };

std::string to_string(ExternalStatus s);

struct ExternalResult {
  ExternalStatus status = ExternalStatus::ProcessFailure;
  std::optional<Assignment> assignment;
  std::string message;
  double elapsed = 0.0;
};

/// Writes the model, runs the backend, reads "name value" lines back and
/// validates them against every row under the configured tolerance.
///
/// A backend reports status through a leading "# status: <word>" comment
/// (optimal, feasible, infeasible, time_limit); a missing comment means a
/// solution is present.
ExternalResult solve_external(const LinearModel& m, const BackendConfig& cfg);

class BackendError : public std::runtime_error {
 public:
  BackendError(ExternalStatus status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  ExternalStatus status() const { return status_; }

 private:
  ExternalStatus status_;
};

/// Vertices with x_i >= 1/2. Throws std::domain_error when some x_i is
/// farther than `tolerance` from 0 and 1.
VertexSet extract_vertex_set(const VariableLayout& layout, const Assignment& a, const Rational& tolerance);

/// Builds the spec's formulation, solves it externally and recomputes the
/// objective from the graph. Throws BackendError on process or validation failure.
Solution solve_with_backend(const Graph& g, const ProblemSpec& spec, const BackendConfig& cfg);

// --------------------------------------------------------------- lazy loop

struct LazyOptions {
  SearchLimits limits;
  /// External backend; the built-in search is used when nullopt.
  std::optional<BackendConfig> backend;
};

/// Densest connected k-subgraph by repeatedly solving the cardinality model
/// plus the accumulated neighbourhood cuts until the answer is connected.
Solution solve_lazy(const Graph& g, int k, const LazyOptions& options = {});

}  // namespace qclique
