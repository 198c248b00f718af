#include "qclique/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace qclique {

Graph Graph::from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> pairs,
                        std::vector<Vertex> original_ids) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  if (original_ids.empty()) {
    original_ids.resize(static_cast<std::size_t>(n));
    std::iota(original_ids.begin(), original_ids.end(), 0);
  } else if (original_ids.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("original id table does not match vertex count");
  }
  g.original_ids_ = std::move(original_ids);

  g.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + " " +
                                  std::to_string(b));
    }
    if (a == b) continue;
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  for (const Edge& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

VertexSet::VertexSet(std::vector<Vertex> members, Vertex n) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("duplicate vertex in set");
  }
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= n)) {
    throw std::invalid_argument("vertex id out of range");
  }
}

VertexSet VertexSet::all(Vertex n) {
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  return VertexSet(std::move(ids), n);
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

OrientedArcs OrientedArcs::of(const Graph& g, bool with_root) {
  OrientedArcs out;
  out.rooted = with_root;
  out.num_graph_arcs = 2 * g.num_edges();
  out.arcs.reserve(out.num_graph_arcs + (with_root ? static_cast<std::size_t>(g.num_vertices()) : 0));
  for (const Edge& e : g.edges()) {
    out.arcs.push_back({e.u, e.v});
    out.arcs.push_back({e.v, e.u});
  }
  if (with_root) {
    for (Vertex j = 0; j < g.num_vertices(); ++j) out.arcs.push_back({kRoot, j});
  }
  return out;
}

ComponentResult largest_component(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> label(static_cast<std::size_t>(n), -1);
  Vertex best_root = -1;
  std::size_t best_size = 0;
  for (Vertex start = 0; start < n; ++start) {
    if (label[static_cast<std::size_t>(start)] != -1) continue;
    std::size_t size = 0;
    std::queue<Vertex> queue;
    queue.push(start);
    label[static_cast<std::size_t>(start)] = start;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      ++size;
      for (Vertex w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = start;
          queue.push(w);
        }
      }
    }
    // Strict comparison keeps the component found first, i.e. the one
    // containing the smallest id.
    if (size > best_size) {
      best_size = size;
      best_root = start;
    }
  }

  ComponentResult result;
  result.old_to_new.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> original;
  for (Vertex v = 0; v < n; ++v) {
    if (label[static_cast<std::size_t>(v)] == best_root) {
      result.old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(original.size());
      original.push_back(g.original_id(v));
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) {
    Vertex a = result.old_to_new[static_cast<std::size_t>(e.u)];
    Vertex b = result.old_to_new[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) pairs.emplace_back(a, b);
  }
  const auto kept = static_cast<Vertex>(original.size());
  result.graph = Graph::from_edges(kept, std::move(pairs), std::move(original));
  return result;
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
  std::size_t count = 0;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && s.contains(w)) ++count;
    }
  }
  return count;
}

Rational density(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("density of an empty vertex set");
  if (s.size() == 1) return Rational(1);
  const auto size = static_cast<long long>(s.size());
  return Rational(2 * static_cast<long long>(induced_edge_count(g, s)), size * (size - 1));
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<VertexSet> parts;
  for (Vertex start : s) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Vertex> block{start};
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t head = 0; head < block.size(); ++head) {
      for (Vertex w : g.neighbors(block[head])) {
        if (!seen[static_cast<std::size_t>(w)] && s.contains(w)) {
          seen[static_cast<std::size_t>(w)] = 1;
          block.push_back(w);
        }
      }
    }
    parts.emplace_back(std::move(block), g.num_vertices());
  }
  return parts;
}

bool is_connected(const Graph& g, const VertexSet& s) { return components(g, s).size() <= 1; }

VertexSet boundary_neighbors(const Graph& g, const VertexSet& c) {
  std::vector<Vertex> out;
  for (Vertex v : c) {
    for (Vertex w : g.neighbors(v)) {
      if (!c.contains(w)) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return VertexSet(std::move(out), g.num_vertices());
}

}  // namespace qclique
