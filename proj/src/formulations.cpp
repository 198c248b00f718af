#include "qclique/formulations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qclique {

namespace {

std::string edge_key(const Edge& e) { return std::to_string(e.u) + "_" + std::to_string(e.v); }

std::string arc_key(const OrientedArcs::Arc& a) {
  return (a.tail == OrientedArcs::kRoot ? std::string("r") : std::to_string(a.tail)) + "_" + std::to_string(a.head);
}

std::string fingerprint(const Graph& g) {
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (value >> (8 * byte)) & 0xffU;
      hash *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.num_vertices()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  std::ostringstream out;
  out << "n=" << g.num_vertices() << " m=" << g.num_edges() << " fnv=" << std::hex << hash;
  return out.str();
}

/// Scales a row so every coefficient has a finite decimal expansion, which
/// keeps it exact through LP/MPS text. Rows that already qualify are left
/// untouched.
void make_decimal_exact(std::vector<Term>& terms, Rational& rhs) {
  BigInt scale = 1;
  auto absorb = [&](const Rational& r) {
    BigInt d = boost::multiprecision::denominator(r);
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    scale = boost::multiprecision::lcm(scale, d);
  };
  for (const Term& t : terms) absorb(t.coef);
  absorb(rhs);
  if (scale == 1) return;
  for (Term& t : terms) t.coef *= scale;
  rhs *= scale;
}

void check_layout(const Formulation& f, const Graph& g) {
  if (f.layout.x.size() != static_cast<std::size_t>(g.num_vertices()) || f.layout.y.size() != g.num_edges()) {
    throw std::invalid_argument("model was not built over this graph");
  }
}

/// Adds the two "y_ij <= x_i", "y_ij <= x_j" rows per edge.
void add_edge_links(Formulation& f, const Graph& g, const std::string& prefix) {
  auto& m = f.model;
  const auto& L = f.layout;
  std::size_t e = 0;
  for (const Edge& edge : g.edges()) {
    const std::string key = edge_key(edge);
    m.add_constraint({{L.y[e], 1}, {L.x[static_cast<std::size_t>(edge.u)], -1}}, Sense::LessEqual, 0,
                     prefix + "edge_tail." + key);
    m.add_constraint({{L.y[e], 1}, {L.x[static_cast<std::size_t>(edge.v)], -1}}, Sense::LessEqual, 0,
                     prefix + "edge_head." + key);
    ++e;
  }
}

void add_vertex_and_edge_vars(Formulation& f, const Graph& g) {
  for (Vertex i = 0; i < g.num_vertices(); ++i) f.layout.x.push_back(f.model.add_binary("x_" + std::to_string(i)));
  for (const Edge& e : g.edges()) {
    f.layout.y.push_back(f.model.add_continuous("y_" + edge_key(e), Rational(0), Rational(1)));
  }
}

}  // namespace

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::None:
      return "none";
    case Connectivity::MPR:
      return "mpr";
    case Connectivity::CSTree:
      return "cstree";
    case Connectivity::CFlow:
      return "cflow";
    case Connectivity::Lazy:
      return "lazy";
  }
  return "none";
}

std::optional<Connectivity> parse_connectivity(std::string_view text) {
  for (auto c : {Connectivity::None, Connectivity::MPR, Connectivity::CSTree, Connectivity::CFlow, Connectivity::Lazy}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

void ProblemSpec::validate(Vertex n) const {
  if (is_quasi_clique()) {
    const Rational& g = gamma();
    if (g <= 0 || g > 1) throw std::invalid_argument("gamma must lie in (0, 1]");
    if (bounds && (bounds->lower < 1 || bounds->lower > bounds->upper || bounds->upper > n)) {
      throw std::invalid_argument("size bounds must satisfy 1 <= lower <= upper <= n");
    }
    if (n < 1) throw std::invalid_argument("quasi-clique search needs a nonempty graph");
    if (connectivity == Connectivity::CFlow) {
      throw std::invalid_argument("cflow rows need a fixed cardinality (densest-subgraph problems only)");
    }
    if (connectivity == Connectivity::Lazy) {
      throw std::invalid_argument("lazy cuts are only defined for densest-subgraph problems");
    }
  } else {
    if (k() < 2 || k() > n) throw std::invalid_argument("k must satisfy 2 <= k <= n");
    if (connectivity == Connectivity::MPR) {
      throw std::invalid_argument("mpr rows are only defined for quasi-clique problems");
    }
  }
}

std::string ProblemSpec::describe() const {
  std::string base = is_quasi_clique() ? "mqc gamma=" + format_fraction(gamma()) : "dks k=" + std::to_string(k());
  return base + " connectivity=" + to_string(connectivity);
}

Formulation build_m1(const Graph& g, int k) {
  if (k < 2 || k > g.num_vertices()) throw std::invalid_argument("k must satisfy 2 <= k <= n");
  Formulation f;
  f.layout.base = BaseModel::M1;
  f.layout.k = k;
  add_vertex_and_edge_vars(f, g);

  std::vector<Term> card;
  for (VarId x : f.layout.x) card.push_back({x, 1});
  f.model.add_constraint(std::move(card), Sense::Equal, k, "m1.card");
  add_edge_links(f, g, "m1.");

  std::vector<Term> objective;
  for (VarId y : f.layout.y) objective.push_back({y, 1});
  f.model.set_objective(std::move(objective));
  f.model.metadata()["graph"] = fingerprint(g);
  f.model.metadata()["problem"] = "dks k=" + std::to_string(k);
  return f;
}

Formulation build_f3(const Graph& g, const Rational& gamma, int lower, int upper) {
  if (gamma <= 0 || gamma > 1) throw std::invalid_argument("gamma must lie in (0, 1]");
  if (lower < 1 || lower > upper || upper > g.num_vertices()) {
    throw std::invalid_argument("size bounds must satisfy 1 <= lower <= upper <= n");
  }
  Formulation f;
  f.layout.base = BaseModel::F3;
  f.layout.size_bounds = {lower, upper};
  add_vertex_and_edge_vars(f, g);
  for (int s = lower; s <= upper; ++s) {
    f.layout.z.push_back(f.model.add_continuous("z_" + std::to_string(s), Rational(0), Rational(1)));
  }

  std::vector<Term> density;
  for (VarId y : f.layout.y) density.push_back({y, 1});
  for (int s = lower; s <= upper; ++s) {
    Rational pairs(static_cast<long long>(s) * (s - 1), 2);
    density.push_back({f.layout.z[static_cast<std::size_t>(s - lower)], -gamma * pairs});
  }
  Rational zero = 0;
  make_decimal_exact(density, zero);
  f.model.add_constraint(std::move(density), Sense::GreaterEqual, zero, "f3.density");

  std::vector<Term> size;
  for (VarId x : f.layout.x) size.push_back({x, 1});
  for (int s = lower; s <= upper; ++s) size.push_back({f.layout.z[static_cast<std::size_t>(s - lower)], -s});
  f.model.add_constraint(std::move(size), Sense::Equal, 0, "f3.size");

  std::vector<Term> choice;
  for (VarId z : f.layout.z) choice.push_back({z, 1});
  f.model.add_constraint(std::move(choice), Sense::Equal, 1, "f3.size_choice");
  add_edge_links(f, g, "f3.");

  std::vector<Term> objective;
  for (VarId x : f.layout.x) objective.push_back({x, 1});
  f.model.set_objective(std::move(objective));
  f.model.metadata()["graph"] = fingerprint(g);
  f.model.metadata()["problem"] = "mqc gamma=" + format_fraction(gamma) + " sizes=" + std::to_string(lower) + ".." +
                                  std::to_string(upper);
  return f;
}

SizeBounds default_bounds(const Graph& g, const Rational& /*gamma*/) {
  return SizeBounds{1, std::max<int>(1, g.num_vertices())};
}

void add_mpr(Formulation& f, const Graph& g, int u) {
  check_layout(f, g);
  if (f.layout.base != BaseModel::F3) throw std::invalid_argument("mpr rows extend the quasi-clique model only");
  if (f.layout.has_mpr()) throw std::invalid_argument("mpr rows already present");
  if (u < 1) throw std::invalid_argument("size bound u must be positive");
  auto& m = f.model;
  auto& L = f.layout;
  const Vertex n = g.num_vertices();
  const Rational big_m = u;

  for (Vertex i = 0; i < n; ++i) L.mpr_source.push_back(m.add_binary("c_" + std::to_string(i)));
  for (const Edge& e : g.edges()) L.mpr_flow.push_back(m.add_continuous("mf_" + edge_key(e), std::nullopt, std::nullopt));

  std::vector<Term> one;
  for (VarId c : L.mpr_source) one.push_back({c, 1});
  m.add_constraint(std::move(one), Sense::Equal, 1, "mpr.one_source");
  for (Vertex i = 0; i < n; ++i) {
    m.add_constraint({{L.mpr_source[static_cast<std::size_t>(i)], 1}, {L.x[static_cast<std::size_t>(i)], -1}},
                     Sense::LessEqual, 0, "mpr.source_in_set." + std::to_string(i));
  }

  // Net outflow of i: edges {i,j} with i<j leave i, edges {j,i} with j<i enter it.
  std::vector<std::vector<Term>> outflow(static_cast<std::size_t>(n));
  std::size_t idx = 0;
  for (const Edge& e : g.edges()) {
    outflow[static_cast<std::size_t>(e.u)].push_back({L.mpr_flow[idx], 1});
    outflow[static_cast<std::size_t>(e.v)].push_back({L.mpr_flow[idx], -1});
    ++idx;
  }

  for (Vertex i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const std::string id = std::to_string(i);
    const VarId c = L.mpr_source[ui];
    const VarId x = L.x[ui];
    auto with_total = [&](Rational sign_total) {
      std::vector<Term> t = outflow[ui];
      for (VarId h : L.x) t.push_back({h, sign_total});
      return t;
    };
    // outflow >= sum x - 1 - u(1 - c)
    {
      auto t = with_total(-1);
      t.push_back({c, -big_m});
      m.add_constraint(std::move(t), Sense::GreaterEqual, -1 - big_m, "mpr.source_supply_lo." + id);
    }
    // outflow <= sum x - 1 + u(1 - c)
    {
      auto t = with_total(-1);
      t.push_back({c, big_m});
      m.add_constraint(std::move(t), Sense::LessEqual, big_m - 1, "mpr.source_supply_hi." + id);
    }
    // outflow >= -1 - u(1 + c - x)
    {
      auto t = outflow[ui];
      t.push_back({c, big_m});
      t.push_back({x, -big_m});
      m.add_constraint(std::move(t), Sense::GreaterEqual, -1 - big_m, "mpr.demand_lo." + id);
    }
    // outflow <= -1 + u(1 + c - x)
    {
      auto t = outflow[ui];
      t.push_back({c, -big_m});
      t.push_back({x, big_m});
      m.add_constraint(std::move(t), Sense::LessEqual, big_m - 1, "mpr.demand_hi." + id);
    }
  }

  idx = 0;
  const Rational cap = u - 1;
  for (const Edge& e : g.edges()) {
    const std::string key = edge_key(e);
    m.add_constraint({{L.mpr_flow[idx], 1}, {L.y[idx], cap}}, Sense::GreaterEqual, 0, "mpr.flow_lo." + key);
    m.add_constraint({{L.mpr_flow[idx], 1}, {L.y[idx], -cap}}, Sense::LessEqual, 0, "mpr.flow_hi." + key);
    ++idx;
  }
}

void add_cstree(Formulation& f, const Graph& g, int u) {
  check_layout(f, g);
  if (f.layout.has_tree()) throw std::invalid_argument("spanning-tree rows already present");
  if (u < 1) throw std::invalid_argument("size bound u must be positive");
  auto& m = f.model;
  auto& L = f.layout;
  const Vertex n = g.num_vertices();
  const OrientedArcs arcs = OrientedArcs::of(g, true);
  L.tree_capacity = u;

  for (const auto& a : arcs.arcs) L.tree_arc.push_back(m.add_binary("v_" + arc_key(a)));
  for (const auto& a : arcs.arcs) L.tree_flow.push_back(m.add_continuous("f_" + arc_key(a), Rational(0), std::nullopt));

  std::vector<std::vector<std::size_t>> in_arcs(static_cast<std::size_t>(n));
  std::vector<std::vector<std::size_t>> out_arcs(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < arcs.arcs.size(); ++a) {
    in_arcs[static_cast<std::size_t>(arcs.arcs[a].head)].push_back(a);
    if (arcs.arcs[a].tail != OrientedArcs::kRoot) out_arcs[static_cast<std::size_t>(arcs.arcs[a].tail)].push_back(a);
  }

  // Every selected vertex has exactly one tree arc entering it.
  for (Vertex j = 0; j < n; ++j) {
    std::vector<Term> t;
    for (std::size_t a : in_arcs[static_cast<std::size_t>(j)]) t.push_back({L.tree_arc[a], 1});
    t.push_back({L.x[static_cast<std::size_t>(j)], -1});
    m.add_constraint(std::move(t), Sense::Equal, 0, "stree.indegree." + std::to_string(j));
  }
  {
    std::vector<Term> t;
    for (Vertex j = 0; j < n; ++j) t.push_back({L.tree_arc[arcs.root_arc(j)], 1});
    m.add_constraint(std::move(t), Sense::Equal, 1, "stree.root_degree");
  }
  // Inflow (root arc included) minus outflow equals x_j.
  for (Vertex j = 0; j < n; ++j) {
    std::vector<Term> t;
    for (std::size_t a : in_arcs[static_cast<std::size_t>(j)]) t.push_back({L.tree_flow[a], 1});
    for (std::size_t a : out_arcs[static_cast<std::size_t>(j)]) t.push_back({L.tree_flow[a], -1});
    t.push_back({L.x[static_cast<std::size_t>(j)], -1});
    m.add_constraint(std::move(t), Sense::Equal, 0, "stree.balance." + std::to_string(j));
  }
  for (std::size_t a = 0; a < arcs.arcs.size(); ++a) {
    m.add_constraint({{L.tree_flow[a], 1}, {L.tree_arc[a], -1}}, Sense::GreaterEqual, 0,
                     "stree.arc_used." + arc_key(arcs.arcs[a]));
  }
  const Rational inner_cap = u - 1;
  for (std::size_t a = 0; a < arcs.num_graph_arcs; ++a) {
    m.add_constraint({{L.tree_flow[a], 1}, {L.tree_arc[a], -inner_cap}}, Sense::LessEqual, 0,
                     "stree.arc_cap." + arc_key(arcs.arcs[a]));
  }
  for (Vertex j = 0; j < n; ++j) {
    const std::size_t a = arcs.root_arc(j);
    m.add_constraint({{L.tree_flow[a], 1}, {L.tree_arc[a], -Rational(u)}}, Sense::LessEqual, 0,
                     "stree.root_cap." + std::to_string(j));
  }
  {
    std::vector<Term> t;
    for (Vertex j = 0; j < n; ++j) t.push_back({L.tree_flow[arcs.root_arc(j)], 1});
    for (VarId x : L.x) t.push_back({x, -1});
    m.add_constraint(std::move(t), Sense::Equal, 0, "stree.root_supply");
  }
  std::size_t e = 0;
  for (const Edge& edge : g.edges()) {
    m.add_constraint({{L.tree_arc[2 * e], 1}, {L.tree_arc[2 * e + 1], 1}, {L.y[e], -1}}, Sense::LessEqual, 0,
                     "stree.edge_link." + edge_key(edge));
    ++e;
  }
}

void add_cflow(Formulation& f, const Graph& g, int k) {
  check_layout(f, g);
  if (f.layout.base != BaseModel::M1 || f.layout.k != k) {
    throw std::invalid_argument("cflow rows extend the cardinality model with the same k");
  }
  if (f.layout.has_flow()) throw std::invalid_argument("cflow rows already present");
  auto& m = f.model;
  auto& L = f.layout;
  const Vertex n = g.num_vertices();
  const OrientedArcs arcs = OrientedArcs::of(g, false);

  for (Vertex j = 0; j < n; ++j) L.flow_source.push_back(m.add_binary("s_" + std::to_string(j)));
  for (const auto& a : arcs.arcs) L.flow_arc.push_back(m.add_continuous("g_" + arc_key(a), Rational(0), std::nullopt));

  std::vector<Term> one;
  for (VarId s : L.flow_source) one.push_back({s, 1});
  m.add_constraint(std::move(one), Sense::Equal, 1, "cflow.one_source");
  for (Vertex j = 0; j < n; ++j) {
    m.add_constraint({{L.flow_source[static_cast<std::size_t>(j)], 1}, {L.x[static_cast<std::size_t>(j)], -1}},
                     Sense::LessEqual, 0, "cflow.source_in_set." + std::to_string(j));
  }
  const Rational cap = k;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    m.add_constraint({{L.flow_arc[2 * e], 1}, {L.y[e], -cap}}, Sense::LessEqual, 0, "cflow.cap." + arc_key(arcs.arcs[2 * e]));
    m.add_constraint({{L.flow_arc[2 * e + 1], 1}, {L.y[e], -cap}}, Sense::LessEqual, 0,
                     "cflow.cap." + arc_key(arcs.arcs[2 * e + 1]));
  }
  // Inflow minus outflow equals x_i - k s_i.
  std::vector<std::vector<Term>> balance(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < arcs.arcs.size(); ++a) {
    balance[static_cast<std::size_t>(arcs.arcs[a].head)].push_back({L.flow_arc[a], 1});
    balance[static_cast<std::size_t>(arcs.arcs[a].tail)].push_back({L.flow_arc[a], -1});
  }
  for (Vertex i = 0; i < n; ++i) {
    auto t = balance[static_cast<std::size_t>(i)];
    t.push_back({L.x[static_cast<std::size_t>(i)], -1});
    t.push_back({L.flow_source[static_cast<std::size_t>(i)], cap});
    m.add_constraint(std::move(t), Sense::Equal, 0, "cflow.balance." + std::to_string(i));
  }
}

Formulation build(const Graph& g, const ProblemSpec& spec) {
  spec.validate(g.num_vertices());
  Formulation f;
  if (spec.is_quasi_clique()) {
    SizeBounds b = spec.bounds.value_or(default_bounds(g, spec.gamma()));
    f = build_f3(g, spec.gamma(), b.lower, b.upper);
    if (spec.connectivity == Connectivity::MPR) add_mpr(f, g, b.upper);
    if (spec.connectivity == Connectivity::CSTree) add_cstree(f, g, b.upper);
  } else {
    f = build_m1(g, spec.k());
    if (spec.connectivity == Connectivity::CSTree) add_cstree(f, g, spec.k());
    if (spec.connectivity == Connectivity::CFlow) add_cflow(f, g, spec.k());
  }
  f.model.metadata()["problem"] = spec.describe();
  return f;
}

std::vector<LazyCut> lazy_cuts(const Graph& g, const VertexSet& s, int k) {
  std::vector<LazyCut> cuts;
  auto parts = components(g, s);
  if (parts.size() <= 1) return cuts;
  for (const VertexSet& c : parts) {
    if (static_cast<int>(c.size()) >= k) continue;
    VertexSet boundary = boundary_neighbors(g, c);
    std::vector<Vertex> n(boundary.begin(), boundary.end());
    for (Vertex j : c) cuts.push_back(LazyCut{n, j});
  }
  return cuts;
}

LinearConstraint lazy_cut_row(const LazyCut& cut, const VariableLayout& layout, const std::string& tag) {
  LinearConstraint row;
  for (Vertex i : cut.neighborhood) row.terms.push_back({layout.x.at(static_cast<std::size_t>(i)), 1});
  row.terms.push_back({layout.x.at(static_cast<std::size_t>(cut.vertex)), -1});
  row.terms = normalize_terms(std::move(row.terms));
  row.sense = Sense::GreaterEqual;
  row.rhs = 0;
  row.tag = tag;
  return row;
}

bool cut_satisfied(const LazyCut& cut, const VertexSet& s) {
  if (!s.contains(cut.vertex)) return true;
  return std::any_of(cut.neighborhood.begin(), cut.neighborhood.end(), [&](Vertex v) { return s.contains(v); });
}

std::optional<Certificate> build_certificate(const Graph& g, const VertexSet& s, Connectivity mode, int bound) {
  if (s.empty()) throw std::invalid_argument("certificate needs a nonempty vertex set");
  if (mode != Connectivity::CSTree && mode != Connectivity::CFlow && mode != Connectivity::MPR) {
    throw std::invalid_argument("certificates exist for mpr, cstree and cflow only");
  }
  if (mode == Connectivity::CFlow && static_cast<int>(s.size()) != bound) {
    throw std::invalid_argument("cflow certificate needs |s| = k");
  }
  if (static_cast<int>(s.size()) > bound) throw std::invalid_argument("vertex set larger than the size bound");
  if (!is_connected(g, s)) return std::nullopt;

  const Vertex n = g.num_vertices();
  const Vertex source = *s.begin();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  std::vector<Vertex> order{source};
  parent[static_cast<std::size_t>(source)] = -1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : g.neighbors(order[head])) {
      if (parent[static_cast<std::size_t>(w)] == -2 && s.contains(w)) {
        parent[static_cast<std::size_t>(w)] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<long long> subtree(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    subtree[static_cast<std::size_t>(*it)] += 1;
    Vertex p = parent[static_cast<std::size_t>(*it)];
    if (p >= 0) subtree[static_cast<std::size_t>(p)] += subtree[static_cast<std::size_t>(*it)];
  }

  Certificate cert;
  cert.mode = mode;
  cert.source = source;
  const std::size_t m = g.num_edges();
  if (mode == Connectivity::MPR) {
    cert.flow.assign(m, 0);
  } else {
    cert.flow.assign(2 * m + (mode == Connectivity::CSTree ? static_cast<std::size_t>(n) : 0), 0);
  }
  for (Vertex c : order) {
    Vertex p = parent[static_cast<std::size_t>(c)];
    if (p < 0) continue;
    const std::size_t e = *g.edge_index(p, c);
    const long long amount = subtree[static_cast<std::size_t>(c)];
    if (mode == Connectivity::MPR) {
      cert.flow[e] = p < c ? amount : -amount;
    } else {
      cert.flow[2 * e + (p < c ? 0 : 1)] = amount;
    }
  }
  if (mode == Connectivity::CSTree) cert.flow[2 * m + static_cast<std::size_t>(source)] = static_cast<long long>(s.size());
  return cert;
}

Assignment indicator_assignment(const Formulation& f, const Graph& g, const VertexSet& s) {
  check_layout(f, g);
  Assignment a = Assignment::zeros(f.model);
  const auto& L = f.layout;
  for (Vertex v : s) a.set(L.x[static_cast<std::size_t>(v)], 1);
  std::size_t e = 0;
  for (const Edge& edge : g.edges()) {
    if (s.contains(edge.u) && s.contains(edge.v)) a.set(L.y[e], 1);
    ++e;
  }
  if (L.base == BaseModel::F3) {
    const int size = static_cast<int>(s.size());
    if (size >= L.size_bounds.lower && size <= L.size_bounds.upper) {
      a.set(L.z[static_cast<std::size_t>(size - L.size_bounds.lower)], 1);
    }
  }
  return a;
}

void apply_certificate(const Certificate& cert, const VariableLayout& layout, Assignment& a) {
  switch (cert.mode) {
    case Connectivity::CSTree:
      if (cert.flow.size() != layout.tree_flow.size()) throw std::invalid_argument("certificate does not fit layout");
      for (std::size_t arc = 0; arc < cert.flow.size(); ++arc) {
        a.set(layout.tree_arc[arc], cert.flow[arc] > 0 ? 1 : 0);
        a.set(layout.tree_flow[arc], cert.flow[arc]);
      }
      break;
    case Connectivity::CFlow:
      if (cert.flow.size() != layout.flow_arc.size()) throw std::invalid_argument("certificate does not fit layout");
      for (std::size_t j = 0; j < layout.flow_source.size(); ++j) {
        a.set(layout.flow_source[j], static_cast<Vertex>(j) == cert.source ? 1 : 0);
      }
      for (std::size_t arc = 0; arc < cert.flow.size(); ++arc) a.set(layout.flow_arc[arc], cert.flow[arc]);
      break;
    case Connectivity::MPR:
      if (cert.flow.size() != layout.mpr_flow.size()) throw std::invalid_argument("certificate does not fit layout");
      for (std::size_t j = 0; j < layout.mpr_source.size(); ++j) {
        a.set(layout.mpr_source[j], static_cast<Vertex>(j) == cert.source ? 1 : 0);
      }
      for (std::size_t e = 0; e < cert.flow.size(); ++e) a.set(layout.mpr_flow[e], cert.flow[e]);
      break;
    default:
      throw std::invalid_argument("certificate mode has no connectivity variables");
  }
}

}  // namespace qclique
