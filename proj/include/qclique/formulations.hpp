#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qclique/graph.hpp"
#include "qclique/model.hpp"

namespace qclique {

/// Largest vertex set with induced density >= gamma.
struct MaxQuasiClique {
  Rational gamma;
};

/// k-vertex set with the most induced edges.
struct DensestSubgraph {
  int k = 0;
};

enum class Connectivity { None, MPR, CSTree, CFlow, Lazy };

std::string to_string(Connectivity c);
std::optional<Connectivity> parse_connectivity(std::string_view text);

/// Size window [lower, upper] used by the quasi-clique model (and as big-M).
struct SizeBounds {
  int lower = 1;
  int upper = 1;
};

struct ProblemSpec {
  std::variant<MaxQuasiClique, DensestSubgraph> problem;
  Connectivity connectivity = Connectivity::None;
  std::optional<SizeBounds> bounds;  // quasi-clique model only; defaults to (1, n)

  bool is_quasi_clique() const { return std::holds_alternative<MaxQuasiClique>(problem); }
  bool requires_connected() const { return connectivity != Connectivity::None; }
  const Rational& gamma() const { return std::get<MaxQuasiClique>(problem).gamma; }
  int k() const { return std::get<DensestSubgraph>(problem).k; }

  /// Throws std::invalid_argument when the spec does not fit a graph on n vertices.
  void validate(Vertex n) const;
  std::string describe() const;
};

enum class BaseModel { M1, F3 };

/// Handles of every variable a builder created, keyed by graph entity.
///
/// Flow conventions differ per family: MPR flows live on edges {i,j} read
/// as i -> j (i < j) and may be negative; C-STree flows live on the rooted
/// arc list (OrientedArcs::of(g, true)) and C-Flow flows on the plain arc
/// list, both nonnegative.
struct VariableLayout {
  BaseModel base = BaseModel::M1;
  int k = 0;                // M1 cardinality
  SizeBounds size_bounds;   // F3 window
  std::vector<VarId> x;     // per vertex
  std::vector<VarId> y;     // per edge index
  std::vector<VarId> z;     // F3: z[s - size_bounds.lower] for size s

  std::vector<VarId> mpr_source;  // c_i
  std::vector<VarId> mpr_flow;    // per edge

  std::vector<VarId> tree_arc;    // v over rooted arcs
  std::vector<VarId> tree_flow;   // f over rooted arcs
  int tree_capacity = 0;          // u used by the spanning-tree rows

  std::vector<VarId> flow_source; // s_j
  std::vector<VarId> flow_arc;    // f over plain arcs

  bool has_mpr() const { return !mpr_source.empty(); }
  bool has_tree() const { return !tree_arc.empty(); }
  bool has_flow() const { return !flow_source.empty(); }
};

struct Formulation {
  LinearModel model;
  VariableLayout layout;
};

/// Cardinality-k densest subgraph model: max sum y, sum x = k, y <= x.
Formulation build_m1(const Graph& g, int k);

/// Quasi-clique model: max sum x with the density row written over size
/// indicators z_s for s in [lower, upper].
Formulation build_f3(const Graph& g, const Rational& gamma, int lower, int upper);

/// (1, n): no tightening is attempted.
SizeBounds default_bounds(const Graph& g, const Rational& gamma);

/// Source-selection flow rows on undirected edges (quasi-clique model only).
void add_mpr(Formulation& f, const Graph& g, int u);

/// Rooted spanning-tree single-commodity flow rows. `u` is the size upper
/// bound; with the cardinality model pass u = k.
void add_cstree(Formulation& f, const Graph& g, int u);

/// Source plus k-1 units of flow (cardinality model only, same k).
void add_cflow(Formulation& f, const Graph& g, int k);

/// Base model plus the spec's connectivity rows (Lazy adds none).
Formulation build(const Graph& g, const ProblemSpec& spec);

/// "Some neighbour of C is selected whenever j in C is": sum_{i in N(C)} x_i >= x_j.
struct LazyCut {
  std::vector<Vertex> neighborhood;
  Vertex vertex = 0;

  friend bool operator==(const LazyCut&, const LazyCut&) = default;
  friend auto operator<=>(const LazyCut&, const LazyCut&) = default;
};

/// One cut per member of every component C of G_s with |C| < k; empty when
/// s is connected.
std::vector<LazyCut> lazy_cuts(const Graph& g, const VertexSet& s, int k);
LinearConstraint lazy_cut_row(const LazyCut& cut, const VariableLayout& layout, const std::string& tag);
bool cut_satisfied(const LazyCut& cut, const VertexSet& s);

/// Witness that a vertex set satisfies one family's connectivity rows.
struct Certificate {
  Connectivity mode = Connectivity::CSTree;
  Vertex source = 0;
  /// Integral flow per arc: rooted arcs for CSTree, plain arcs for CFlow,
  /// per edge (signed, i -> j for i < j) for MPR.
  std::vector<long long> flow;
};

/// BFS spanning tree of G_s from its smallest vertex (neighbours in
/// ascending order); flow on each tree arc is the size of the subtree below
/// it. Returns nullopt when G_s is disconnected. Throws std::invalid_argument
/// for an empty set, |s| != k for CFlow, or |s| > u.
std::optional<Certificate> build_certificate(const Graph& g, const VertexSet& s, Connectivity mode, int bound);

/// x = indicator of s, y_ij = x_i x_j, z selecting |s|, everything else 0.
Assignment indicator_assignment(const Formulation& f, const Graph& g, const VertexSet& s);

/// Writes the certificate's connectivity values into `a`.
void apply_certificate(const Certificate& cert, const VariableLayout& layout, Assignment& a);

/// Tag prefixes of each family's rows.
inline constexpr std::string_view kMprPrefix = "mpr.";
inline constexpr std::string_view kTreePrefix = "stree.";
inline constexpr std::string_view kFlowPrefix = "cflow.";
inline constexpr std::string_view kLazyPrefix = "lazy.";

}  // namespace qclique
