#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qclique/formulations.hpp"
#include "qclique/graph.hpp"
#include "qclique/solver.hpp"

namespace qclique {

// ------------------------------------------------------------------ stats

struct InstanceStats {
  Vertex vertices = 0;
  std::size_t edges = 0;
  Rational density;               // whole graph; 1 for a single vertex
  Vertex largest_component = 0;
};

InstanceStats instance_stats(const Graph& g);

/// Two decimals, rounded half up; "<0.01" when the value rounds to 0.00.
std::string format_density(const Rational& density);

/// "n |E| density" followed by "largest component c of n".
std::string render_stats(const InstanceStats& s);

// ------------------------------------------------------------ certificates

struct CertificateCheck {
  bool applicable = false;  // mode has connectivity variables and the set fits its bound
  bool built = false;       // false when the set is disconnected
  bool feasible = false;    // full model accepts indicator + certificate
  std::string detail;
};

/// Builds the spec's model, a certificate for `s` under the spec's mode and
/// evaluates their merged assignment exactly.
CertificateCheck check_certificate(const Graph& g, const ProblemSpec& spec, const VertexSet& s);

// ----------------------------------------------------------------- verify

struct VerifyRequest {
  std::optional<Rational> gamma;
  std::optional<int> k;
};

/// Multi-line report ending in a one-line summary such as
/// "density = 3/7 exactly, feasible, disconnected".
std::string verify_report(const Graph& g, const VertexSet& s, const VerifyRequest& request);

// ------------------------------------------------------------------- grid

enum class Engine { BranchAndBound, Backend, Lazy };

std::string to_string(Engine e);
std::optional<Engine> parse_engine(std::string_view text);

/// gamma = 0.10, 0.11, ..., 1.00 (91 values).
std::vector<Rational> gamma_grid();
/// k = 2, ..., n-1.
std::vector<Rational> k_grid(Vertex n);

struct GridSpec {
  std::string instance;  // display name
  bool quasi_clique = true;
  std::vector<Rational> params;
  Connectivity mode = Connectivity::None;
  Engine engine = Engine::BranchAndBound;
  SearchLimits limits;
  std::optional<BackendConfig> backend;
  int workers = 1;
};

/// One solved (or failed) grid cell as stored in the CSV.
struct GridCell {
  std::string param;   // canonical decimal text
  std::string status;  // Optimal, TimeLimit, Infeasible, MemoryLimit or Error
  long long objective = 0;
  bool connected = false;
  double elapsed = 0.0;
  std::uint64_t nodes = 0;

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

inline constexpr std::string_view kGridHeader = "param,status,objective,connected,elapsed,nodes";

std::string format_cell(const GridCell& c);
/// Throws std::runtime_error on a malformed line.
GridCell parse_cell(std::string_view line);
/// Reads a CSV written by run_grid; a missing file yields no cells.
std::vector<GridCell> read_grid_csv(const std::filesystem::path& path);

/// Solves a single cell; solver failures are recorded as status "Error".
GridCell solve_cell(const Graph& g, const GridSpec& spec, const Rational& param);

/// Runs every cell not already present in the CSV and writes rows in grid
/// order. Returns the cells of the finished file.
std::vector<GridCell> run_grid(const Graph& g, const GridSpec& spec, const std::filesystem::path& csv);

struct GridRow {
  std::string instance;
  std::size_t cells = 0;
  std::size_t solved = 0;   // Optimal or Infeasible
  std::size_t optimal = 0;
  std::size_t disconnected = 0;
  double pct_succ = 0.0;
  double pct_disc = 0.0;      // over Optimal cells
  double runtime_mean = 0.0;  // over solved cells
  double runtime_sd = 0.0;    // sample standard deviation
};

GridRow aggregate(const std::string& instance, const std::vector<GridCell>& cells);

/// "instance  %succ  %disc  mean ± sd" with one decimal, as in the result tables.
std::string render_row(const GridRow& row);
std::string render_markdown(const std::vector<GridRow>& rows);

}  // namespace qclique
