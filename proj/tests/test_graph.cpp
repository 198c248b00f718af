#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "qclique/graph.hpp"
#include "support/graphs.hpp"

using namespace qclique;
using namespace qclique::testing;

namespace {

Graph mm(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_market(in);
}

Graph edges(const std::string& text, int base) {
  std::istringstream in(text);
  return parse_edge_list(in, base);
}

std::size_t error_line(const std::string& text) {
  try {
    mm(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("matrix market parsing") {
    Graph g = mm("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(g.has_edge(0, 1));

    g = mm("%%MatrixMarket matrix coordinate real general\n% comment\n2 2 3\n1 2 0.5\n2 1 1.5\n1 1 3\n");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);

    g = mm("%%MatrixMarket matrix coordinate integer symmetric\n4 4 2\n2 1 7\n4 3 1\n");
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(2, 3));
  }

  TEST_CASE("matrix market errors name the line") {
    CHECK_THROWS_AS(mm("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n"), ParseError);
    CHECK_THROWS_AS(mm("1 2\n"), ParseError);
    CHECK(error_line("%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 2\n1 3\n") == 4);
    CHECK(error_line("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 x\n") == 3);
    CHECK(error_line("%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 2\n") > 0);
  }

  TEST_CASE("edge lists") {
    Graph a = edges("0 1\n1 2\n", 0);
    Graph b = edges("c dimacs\ne 1 2\ne 2 3\n", 1);
    CHECK(a == b);
    CHECK(a == path3());
    CHECK_THROWS_AS(edges("", 0), ParseError);
    CHECK_THROWS_AS(edges("# only comments\n", 0), ParseError);
    CHECK_THROWS_AS(edges("0 1 2\n", 0), ParseError);
    CHECK_THROWS_AS(edges("0 -1\n", 0), ParseError);
    CHECK_THROWS_AS(edges("0 1\n", 1), ParseError);
    Graph p = edges("p edge 5 1\ne 1 2\n", 1);
    CHECK(p.num_vertices() == 5);
  }

  TEST_CASE("normalization and serialization round trip") {
    std::mt19937_64 rng(4);
    for (int round = 0; round < 50; ++round) {
      const Vertex n = 1 + static_cast<Vertex>(rng() % 15);
      std::vector<std::pair<Vertex, Vertex>> raw;
      for (int i = 0; i < 3 * n; ++i) raw.emplace_back(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
      const Graph g = Graph::from_edges(n, raw);
      std::size_t degree_sum = 0;
      for (Vertex v = 0; v < n; ++v) {
        degree_sum += g.degree(v);
        CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
        for (Vertex w : g.neighbors(v)) {
          CHECK(w != v);
          CHECK(g.has_edge(w, v));
        }
      }
      CHECK(degree_sum == 2 * g.num_edges());
      if (g.num_edges() == 0) continue;
      std::istringstream in(write_edge_list(g));
      const Graph again = parse_edge_list(in, 0);
      CHECK(again == g);
      CHECK(write_edge_list(again) == write_edge_list(g));
    }
  }

  TEST_CASE("oriented arcs") {
    const OrientedArcs plain = OrientedArcs::of(triangle(), false);
    CHECK(plain.arcs.size() == 6);
    const OrientedArcs rooted = OrientedArcs::of(triangle(), true);
    CHECK(rooted.arcs.size() == 9);
    CHECK(rooted.arcs[rooted.root_arc(2)].tail == OrientedArcs::kRoot);
    CHECK(rooted.arcs[rooted.root_arc(2)].head == 2);
    CHECK(rooted.arcs[1].tail == rooted.arcs[0].head);
  }

  TEST_CASE("largest component") {
    auto same = largest_component(triangle());
    CHECK(same.graph == triangle());
    CHECK(same.old_to_new == std::vector<Vertex>{0, 1, 2});

    const Graph tri_edge = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    auto r = largest_component(tri_edge);
    CHECK(r.graph == triangle());
    CHECK(r.old_to_new == std::vector<Vertex>{0, 1, 2, -1, -1});

    const Graph tri_k4 = make_graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    auto k4 = largest_component(tri_k4);
    CHECK(k4.graph.num_vertices() == 4);
    CHECK(k4.graph.num_edges() == 6);
    CHECK(k4.graph.original_id(0) == 3);

    const Graph twins = make_graph(6, {{3, 4}, {4, 5}, {0, 1}, {1, 2}});
    auto tie = largest_component(twins);
    CHECK(tie.old_to_new[0] == 0);
    CHECK(tie.old_to_new[3] == -1);

    CHECK(largest_component(Graph()).graph.num_vertices() == 0);
  }

  TEST_CASE("density") {
    CHECK(density(triangle(), VertexSet::all(3)) == 1);
    CHECK(density(path3(), VertexSet::all(3)) == Rational(2, 3));
    CHECK(density(path3(), VertexSet({1}, 3)) == 1);
    CHECK_THROWS(density(path3(), VertexSet()));
  }

  TEST_CASE("components and connectivity") {
    CHECK(is_connected(path3(), VertexSet::all(3)));
    CHECK_FALSE(is_connected(path3(), VertexSet({0, 2}, 3)));
    auto parts = components(path3(), VertexSet({0, 2}, 3));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet({0}, 3));
    CHECK(is_connected(path3(), VertexSet()));
    const Graph g = two_triangles_bridged();
    parts = components(g, VertexSet({0, 1, 2, 4, 5}, 6));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet({0, 1, 2}, 6));
    CHECK(parts[1] == VertexSet({4, 5}, 6));
  }

  TEST_CASE("boundary neighbours") {
    CHECK(boundary_neighbors(triangle(), VertexSet({0}, 3)) == VertexSet({1, 2}, 3));
    CHECK(boundary_neighbors(two_triangles_bridged(), VertexSet({4, 5}, 6)) == VertexSet({3}, 6));
    CHECK(boundary_neighbors(triangle(), VertexSet::all(3)).empty());
  }

  TEST_CASE("vertex set validation") {
    CHECK_THROWS(VertexSet({0, 3}, 3));
    CHECK_THROWS(VertexSet({1, 1}, 3));
    CHECK(VertexSet({2, 0}, 3) == VertexSet({0, 2}, 3));
  }

  TEST_CASE("exhaustive properties on small graphs") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 25; ++round) {
      const Vertex n = 1 + static_cast<Vertex>(rng() % 10);
      const Graph g = random_graph(n, 0.4, rng);
      for (unsigned mask = 1; mask < (1U << n); ++mask) {
        const VertexSet s = subset_from_mask(n, mask);
        const Rational d = density(g, s);
        CHECK(d >= 0);
        CHECK(d <= 1);
        const std::size_t sz = s.size();
        const bool complete = induced_edge_count(g, s) == sz * (sz - 1) / 2;
        CHECK((d == 1) == complete);

        const auto parts = components(g, s);
        std::set<Vertex> seen;
        std::size_t total = 0;
        for (const VertexSet& c : parts) {
          CHECK(is_connected(g, c));
          total += c.size();
          seen.insert(c.begin(), c.end());
        }
        CHECK(total == sz);
        CHECK(seen == std::set<Vertex>(s.begin(), s.end()));
        CHECK(is_connected(g, s) == (parts.size() <= 1));

        const VertexSet b = boundary_neighbors(g, s);
        for (Vertex v : b) {
          CHECK_FALSE(s.contains(v));
          CHECK(std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) { return s.contains(w); }));
        }
        for (Vertex v = 0; v < n; ++v) {
          if (s.contains(v) || b.contains(v)) continue;
          CHECK(std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) { return s.contains(w); }));
        }
      }
      const auto lc = largest_component(g);
      CHECK(is_connected(lc.graph, VertexSet::all(lc.graph.num_vertices())));
    }
  }
}
