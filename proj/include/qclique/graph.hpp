#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qclique/rational.hpp"

namespace qclique {

using Vertex = std::int32_t;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted and deduplicated; adjacency lists are sorted. Each
/// vertex also carries the id it had before any re-packing (for example by
/// largest_component), which is what user-facing output reports.
class Graph {
 public:
  Graph() = default;

  /// Normalizes the input: loops dropped, {i,j} and {j,i} merged, duplicates
  /// removed. Throws std::invalid_argument on an endpoint outside 0..n-1.
  static Graph from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> pairs,
                          std::vector<Vertex> original_ids = {});

  Vertex num_vertices() const { return static_cast<Vertex>(adjacency_.size()); }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex a, Vertex b) const;
  /// Position of {a,b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  Vertex original_id(Vertex v) const { return original_ids_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Vertex> original_ids_;
};

/// Sorted set of distinct vertex ids, validated against a vertex count.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and validates; throws std::invalid_argument on duplicates or
  /// ids outside 0..n-1.
  VertexSet(std::vector<Vertex> members, Vertex n);

  static VertexSet all(Vertex n);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Lexicographic comparison of the sorted member sequences.
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

/// Bi-directed arcs of a graph, optionally with an artificial root.
///
/// For edge e = {u,v} (u < v) arc 2e is (u,v) and arc 2e+1 is (v,u). In the
/// rooted form arc 2|E|+j is (root, j).
struct OrientedArcs {
  static constexpr Vertex kRoot = -1;

  struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
  };

  std::vector<Arc> arcs;
  std::size_t num_graph_arcs = 0;  // 2|E|
  bool rooted = false;

  static OrientedArcs of(const Graph& g, bool with_root);
  std::size_t root_arc(Vertex j) const { return num_graph_arcs + static_cast<std::size_t>(j); }
};

/// Parse failure with the offending 1-based line number (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// MatrixMarket coordinate file (pattern, real or integer field).
Graph parse_matrix_market(std::istream& in);

/// Whitespace edge list; '#', '%' and 'c' lines are comments, an optional
/// leading 'e' is accepted, and a DIMACS "p edge n m" line fixes n.
Graph parse_edge_list(std::istream& in, int base);

/// Dispatches on the "%%MatrixMarket" banner; edge lists use `base`.
Graph parse_graph(std::istream& in, int base = 0);
Graph load_graph(const std::string& path, int base = 0);

/// Canonical serialization: "p edge n m" followed by sorted 0-based pairs.
std::string write_edge_list(const Graph& g);

struct ComponentResult {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for vertices outside the kept component
};

/// Largest connected component, re-packed to 0..m-1 in ascending old id.
/// Ties go to the component holding the smallest vertex id.
ComponentResult largest_component(const Graph& g);

std::size_t induced_edge_count(const Graph& g, const VertexSet& s);

/// 2|E(G_S)| / (|S|(|S|-1)), or 1 for a singleton. Throws on an empty set.
Rational density(const Graph& g, const VertexSet& s);

/// Connected components of the induced subgraph, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g, const VertexSet& s);

/// Vertices outside `c` adjacent to at least one member of `c`.
VertexSet boundary_neighbors(const Graph& g, const VertexSet& c);

}  // namespace qclique
