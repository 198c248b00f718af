#include <algorithm>
#include <chrono>
#include <numeric>

#include "bits.hpp"
#include "qclique/solver.hpp"

namespace qclique {

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  std::vector<Vertex> members;  // sorted
  long long value = 0;
};

bool improves(const std::optional<Candidate>& best, long long value, const std::vector<Vertex>& sorted) {
  if (!best) return true;
  if (value != best->value) return value > best->value;
  return sorted < best->members;
}

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.num_vertices()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

class Search {
 public:
  Search(const Graph& g, const ProblemSpec& spec, const SearchLimits& limits, const std::vector<LazyCut>& cuts)
      : g_(g),
        spec_(spec),
        limits_(limits),
        cuts_(cuts),
        n_(g.num_vertices()),
        in_p_(static_cast<std::size_t>(n_), 0),
        d_p_(static_cast<std::size_t>(n_), 0),
        mark_(static_cast<std::size_t>(n_), 0),
        reach_(static_cast<std::size_t>(n_), 0),
        d_c_(static_cast<std::size_t>(n_), 0) {
    if (spec.is_quasi_clique()) gamma_ = detail::gamma_fraction(spec.gamma());
  }

  void seed(const VertexSet& s) {
    std::vector<Vertex> sorted(s.begin(), s.end());
    if (!cuts_.empty() && !std::all_of(cuts_.begin(), cuts_.end(), [&](const LazyCut& c) { return cut_satisfied(c, s); })) {
      return;
    }
    const long long value = objective_of(g_, spec_, s);
    if (is_feasible(g_, spec_, s) && improves(best_, value, sorted)) best_ = Candidate{std::move(sorted), value};
  }

  Solution run() {
    start_ = Clock::now();
    Solution sol;
    const double bytes = static_cast<double>(n_) * static_cast<double>(n_) * (sizeof(Vertex) + 0.125) +
                         64.0 * static_cast<double>(n_) + static_cast<double>(g_.num_edges()) * 16.0;
    if (bytes > static_cast<double>(limits_.memory_limit)) {
      sol.status = SolveStatus::MemoryLimit;
    } else {
      search(degree_order(g_));
      if (aborted_) {
        sol.status = SolveStatus::TimeLimit;
      } else {
        sol.status = best_ ? SolveStatus::Optimal : SolveStatus::Infeasible;
      }
    }
    if (best_) {
      sol.vertices = VertexSet(best_->members, n_);
      sol.objective = objective_of(g_, spec_, sol.vertices);
    }
    sol.nodes_explored = nodes_;
    sol.elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    return sol;
  }

 private:
  bool out_of_time() {
    if (aborted_) return true;
    if ((nodes_ & 1023U) == 0 || limits_.time_limit <= 0) {
      const double spent = std::chrono::duration<double>(Clock::now() - start_).count();
      if (spent >= limits_.time_limit) aborted_ = true;
    }
    return aborted_;
  }

  void include(Vertex v) {
    e_p_ += d_p_[static_cast<std::size_t>(v)];
    in_p_[static_cast<std::size_t>(v)] = 1;
    p_.push_back(v);
    for (Vertex w : g_.neighbors(v)) ++d_p_[static_cast<std::size_t>(w)];
  }

  void exclude_last() {
    const Vertex v = p_.back();
    p_.pop_back();
    in_p_[static_cast<std::size_t>(v)] = 0;
    for (Vertex w : g_.neighbors(v)) --d_p_[static_cast<std::size_t>(w)];
    e_p_ -= d_p_[static_cast<std::size_t>(v)];
  }

  bool p_connected() const {
    VertexSet s(p_, n_);
    return is_connected(g_, s);
  }

  bool cuts_hold_on_p() const {
    for (const LazyCut& cut : cuts_) {
      if (!in_p_[static_cast<std::size_t>(cut.vertex)]) continue;
      const bool hit = std::any_of(cut.neighborhood.begin(), cut.neighborhood.end(),
                                   [&](Vertex w) { return in_p_[static_cast<std::size_t>(w)] != 0; });
      if (!hit) return false;
    }
    return true;
  }

  void evaluate() {
    const long long size = static_cast<long long>(p_.size());
    long long value = 0;
    if (spec_.is_quasi_clique()) {
      if (!gamma_.admits(2 * e_p_, size)) return;
      value = size;
    } else {
      if (size != spec_.k() || !cuts_hold_on_p()) return;
      value = e_p_;
    }
    if (best_ && value < best_->value) return;
    std::vector<Vertex> sorted = p_;
    std::sort(sorted.begin(), sorted.end());
    if (!improves(best_, value, sorted)) return;
    if (spec_.requires_connected() && !p_connected()) return;
    best_ = Candidate{std::move(sorted), value};
  }

  // A subtree can only produce a tie worth keeping when its smallest
  // available vertex does not exceed the incumbent's smallest vertex.
  bool tie_possible(const std::vector<Vertex>& cand) const {
    if (!best_ || best_->members.empty()) return true;
    Vertex low = n_;
    for (Vertex v : p_) low = std::min(low, v);
    for (Vertex v : cand) low = std::min(low, v);
    return low <= best_->members.front();
  }

  /// Restricts candidates to the component of P in G[P + C]; false when P
  /// itself cannot be joined.
  bool restrict_to_reachable(std::vector<Vertex>& cand) {
    if (p_.empty()) return true;
    ++stamp_;
    for (Vertex v : cand) mark_[static_cast<std::size_t>(v)] = stamp_;
    auto usable = [&](Vertex v) {
      return in_p_[static_cast<std::size_t>(v)] != 0 || mark_[static_cast<std::size_t>(v)] == stamp_;
    };
    std::vector<Vertex> queue{p_.front()};
    reach_[static_cast<std::size_t>(p_.front())] = stamp_;
    std::size_t reached_p = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      if (in_p_[static_cast<std::size_t>(v)]) ++reached_p;
      for (Vertex w : g_.neighbors(v)) {
        if (reach_[static_cast<std::size_t>(w)] == stamp_ || !usable(w)) continue;
        reach_[static_cast<std::size_t>(w)] = stamp_;
        queue.push_back(w);
      }
    }
    if (reached_p < p_.size()) return false;
    std::erase_if(cand, [&](Vertex v) { return reach_[static_cast<std::size_t>(v)] != stamp_; });
    return true;
  }

  bool cuts_can_hold(const std::vector<Vertex>& cand) {
    if (cuts_.empty()) return true;
    ++stamp_;
    for (Vertex v : cand) mark_[static_cast<std::size_t>(v)] = stamp_;
    for (const LazyCut& cut : cuts_) {
      if (!in_p_[static_cast<std::size_t>(cut.vertex)]) continue;
      const bool open = std::any_of(cut.neighborhood.begin(), cut.neighborhood.end(), [&](Vertex w) {
        return in_p_[static_cast<std::size_t>(w)] != 0 || mark_[static_cast<std::size_t>(w)] == stamp_;
      });
      if (!open) return false;
    }
    return true;
  }

  /// Upper bound on 2|E| of any P + T with T a t-subset of the candidates.
  long long twice_edge_bound(const std::vector<Vertex>& cand, long long t) {
    weights_.clear();
    for (Vertex c : cand) {
      weights_.push_back(2LL * d_p_[static_cast<std::size_t>(c)] +
                         std::min<long long>(d_c_[static_cast<std::size_t>(c)], t - 1));
    }
    auto cut = weights_.begin() + t;
    std::nth_element(weights_.begin(), cut - 1, weights_.end(), std::greater<>());
    return 2 * e_p_ + std::accumulate(weights_.begin(), cut, 0LL);
  }

  void count_candidate_degrees(const std::vector<Vertex>& cand) {
    ++stamp_;
    for (Vertex v : cand) mark_[static_cast<std::size_t>(v)] = stamp_;
    for (Vertex v : cand) {
      int count = 0;
      for (Vertex w : g_.neighbors(v)) count += mark_[static_cast<std::size_t>(w)] == stamp_ ? 1 : 0;
      d_c_[static_cast<std::size_t>(v)] = count;
    }
  }

  bool bound_prunes(const std::vector<Vertex>& cand) {
    const long long p = static_cast<long long>(p_.size());
    const long long c = static_cast<long long>(cand.size());
    if (c == 0) return true;
    const bool ties = tie_possible(cand);
    count_candidate_degrees(cand);
    if (spec_.is_quasi_clique()) {
      long long floor_size = p + 1;
      if (best_) floor_size = std::max(floor_size, ties ? best_->value : best_->value + 1);
      for (long long s = p + c; s >= floor_size; --s) {
        if (gamma_.admits(twice_edge_bound(cand, s - p), s)) return false;
      }
      return true;
    }
    const long long t = spec_.k() - p;
    if (t <= 0 || t > c) return true;
    if (!best_) return false;
    const long long edge_bound = twice_edge_bound(cand, t) / 2;
    return edge_bound < best_->value || (edge_bound == best_->value && !ties);
  }

  void search(std::vector<Vertex> cand) {
    ++nodes_;
    if (out_of_time()) return;
    if (spec_.requires_connected() && !restrict_to_reachable(cand)) return;
    if (!cuts_can_hold(cand)) return;
    if (bound_prunes(cand)) return;

    const Vertex v = cand.front();
    std::vector<Vertex> rest(cand.begin() + 1, cand.end());
    include(v);
    evaluate();
    if (spec_.is_quasi_clique() || static_cast<int>(p_.size()) < spec_.k()) search(rest);
    exclude_last();
    if (aborted_) return;
    search(std::move(rest));
  }

  const Graph& g_;
  const ProblemSpec& spec_;
  SearchLimits limits_;
  const std::vector<LazyCut>& cuts_;
  Vertex n_;
  detail::GammaFraction gamma_;

  std::vector<char> in_p_;
  std::vector<int> d_p_;
  std::vector<Vertex> p_;
  long long e_p_ = 0;

  std::vector<std::uint64_t> mark_;
  std::vector<std::uint64_t> reach_;
  std::uint64_t stamp_ = 0;
  std::vector<int> d_c_;
  std::vector<long long> weights_;

  std::optional<Candidate> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  Clock::time_point start_;
};

}  // namespace

std::optional<VertexSet> greedy_start(const Graph& g, const ProblemSpec& spec) {
  spec.validate(g.num_vertices());
  const Vertex n = g.num_vertices();
  const bool quasi = spec.is_quasi_clique();
  const detail::GammaFraction gamma = quasi ? detail::gamma_fraction(spec.gamma()) : detail::GammaFraction{};
  const std::size_t limit = quasi ? static_cast<std::size_t>(n) : static_cast<std::size_t>(spec.k());
  std::vector<Vertex> starts = degree_order(g);
  if (starts.size() > 32) starts.resize(32);

  std::optional<Candidate> best;
  for (Vertex s : starts) {
    std::vector<int> into(static_cast<std::size_t>(n), 0);
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> members;
    long long edges = 0;
    auto add = [&](Vertex v) {
      edges += into[static_cast<std::size_t>(v)];
      chosen[static_cast<std::size_t>(v)] = 1;
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) ++into[static_cast<std::size_t>(w)];
    };
    auto record = [&] {
      const long long size = static_cast<long long>(members.size());
      long long value = 0;
      if (quasi) {
        if (!gamma.admits(2 * edges, size)) return;
        value = size;
      } else {
        if (size != spec.k()) return;
        value = edges;
      }
      std::vector<Vertex> sorted = members;
      std::sort(sorted.begin(), sorted.end());
      if (improves(best, value, sorted)) best = Candidate{std::move(sorted), value};
    };
    add(s);
    record();
    while (members.size() < limit) {
      Vertex pick = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (chosen[static_cast<std::size_t>(v)]) continue;
        if (spec.requires_connected() && into[static_cast<std::size_t>(v)] == 0) continue;
        if (pick < 0 || into[static_cast<std::size_t>(v)] > into[static_cast<std::size_t>(pick)]) pick = v;
      }
      if (pick < 0) break;
      add(pick);
      record();
    }
  }
  if (!best) return std::nullopt;
  return VertexSet(best->members, n);
}

std::optional<VertexSet> peel_start(const Graph& g, const ProblemSpec& spec) {
  spec.validate(g.num_vertices());
  const Vertex n = g.num_vertices();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = static_cast<int>(g.degree(v));
  std::vector<Vertex> members(static_cast<std::size_t>(n));
  std::iota(members.begin(), members.end(), 0);
  while (!members.empty()) {
    VertexSet current(members, n);
    const bool size_ok = spec.is_quasi_clique() || static_cast<int>(members.size()) == spec.k();
    if (size_ok && is_feasible(g, spec, current)) return current;
    if (!spec.is_quasi_clique() && static_cast<int>(members.size()) < spec.k()) break;
    Vertex drop = members.front();
    for (Vertex v : members) {
      if (deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(drop)]) drop = v;
    }
    for (Vertex w : g.neighbors(drop)) --deg[static_cast<std::size_t>(w)];
    std::erase(members, drop);
  }
  return std::nullopt;
}

Solution branch_and_bound(const Graph& g, const ProblemSpec& spec, const SearchLimits& limits,
                          const std::vector<LazyCut>& cuts) {
  spec.validate(g.num_vertices());
  Search search(g, spec, limits, cuts);
  if (auto seed = greedy_start(g, spec)) search.seed(*seed);
  if (spec.is_quasi_clique() && spec.gamma() >= Rational(1, 2)) {
    if (auto seed = peel_start(g, spec)) search.seed(*seed);
  }
  return search.run();
}

}  // namespace qclique
