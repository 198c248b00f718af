#include <algorithm>
#include <chrono>

#include "bits.hpp"
#include "qclique/solver.hpp"

namespace qclique {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "Optimal";
    case SolveStatus::TimeLimit:
      return "TimeLimit";
    case SolveStatus::Infeasible:
      return "Infeasible";
    case SolveStatus::MemoryLimit:
      return "MemoryLimit";
  }
  return "Infeasible";
}

long long objective_of(const Graph& g, const ProblemSpec& spec, const VertexSet& s) {
  if (spec.is_quasi_clique()) return static_cast<long long>(s.size());
  return static_cast<long long>(induced_edge_count(g, s));
}

bool is_feasible(const Graph& g, const ProblemSpec& spec, const VertexSet& s) {
  if (s.empty()) return false;
  if (spec.is_quasi_clique()) {
    if (density(g, s) < spec.gamma()) return false;
  } else if (static_cast<int>(s.size()) != spec.k()) {
    return false;
  }
  return !spec.requires_connected() || is_connected(g, s);
}

namespace {

class Enumerator {
 public:
  Enumerator(const Graph& g, const ProblemSpec& spec)
      : g_(g), spec_(spec), adj_(detail::adjacency_bits(g)), current_(static_cast<std::size_t>(g.num_vertices())) {
    if (spec.is_quasi_clique()) gamma_ = detail::gamma_fraction(spec.gamma());
  }

  Solution run() {
    members_.clear();
    visit(0, 0);
    Solution sol;
    sol.nodes_explored = nodes_;
    if (best_) {
      sol.vertices = VertexSet(*best_, g_.num_vertices());
      sol.objective = objective_of(g_, spec_, sol.vertices);
      sol.status = SolveStatus::Optimal;
    } else {
      sol.status = SolveStatus::Infeasible;
    }
    return sol;
  }

 private:
  bool connected_members() const {
    VertexSet s(members_, g_.num_vertices());
    return is_connected(g_, s);
  }

  // Include-first DFS visits equal-size sets in lexicographic order, so a
  // candidate only replaces the incumbent when strictly better.
  void consider(long long edges) {
    const long long size = static_cast<long long>(members_.size());
    long long value = 0;
    if (spec_.is_quasi_clique()) {
      if (!gamma_.admits(2 * edges, size)) return;
      value = size;
    } else {
      if (size != spec_.k()) return;
      value = edges;
    }
    if (best_ && value <= best_value_) return;
    if (spec_.requires_connected() && !connected_members()) return;
    best_ = members_;
    best_value_ = value;
  }

  void visit(Vertex next, long long edges) {
    ++nodes_;
    const Vertex n = g_.num_vertices();
    const bool fixed_size = !spec_.is_quasi_clique();
    for (Vertex v = next; v < n; ++v) {
      if (fixed_size) {
        const long long need = spec_.k() - static_cast<long long>(members_.size());
        if (need <= 0 || n - v < need) return;
      }
      const long long added = static_cast<long long>(adj_[static_cast<std::size_t>(v)].count_common(current_));
      current_.set(v);
      members_.push_back(v);
      consider(edges + added);
      visit(v + 1, edges + added);
      members_.pop_back();
      current_.reset(v);
    }
  }

  const Graph& g_;
  const ProblemSpec& spec_;
  std::vector<detail::Bits> adj_;
  detail::Bits current_;
  std::vector<Vertex> members_;
  std::optional<std::vector<Vertex>> best_;
  long long best_value_ = 0;
  detail::GammaFraction gamma_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Solution brute_force(const Graph& g, const ProblemSpec& spec) {
  spec.validate(g.num_vertices());
  const Vertex n = g.num_vertices();
  if (spec.is_quasi_clique()) {
    if (n > 25) throw InstanceTooLarge("subset enumeration needs n <= 25");
  } else {
    // C(n,k) computed incrementally; stop once it passes the cap.
    long double count = 1;
    for (int i = 1; i <= spec.k(); ++i) {
      count = count * (n - spec.k() + i) / i;
      if (count > 1e7L + 0.5L) throw InstanceTooLarge("C(n,k) exceeds 10^7");
    }
  }
  auto start = std::chrono::steady_clock::now();
  Solution sol = Enumerator(g, spec).run();
  sol.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace qclique
