#include <doctest.h>

#include <cstdlib>

#include "qclique/solver.hpp"
#include "support/graphs.hpp"

using namespace qclique;
using namespace qclique::testing;

namespace {

BackendConfig shell(std::string command, double limit = 30) {
  BackendConfig cfg;
  cfg.command = std::move(command);
  cfg.time_limit = limit;
  cfg.kill_grace = 0.5;
  return cfg;
}

std::string scipy_command() {
  return "python3 " QCLIQUE_SOURCE_DIR "/tools/scipy_backend.py {model} {solution} {timelimit}";
}

bool scipy_available() { return std::system("python3 -c 'import scipy.optimize' >/dev/null 2>&1") == 0; }

}  // namespace

TEST_SUITE("backend") {
  TEST_CASE("all-zero answer fails validation") {
    const Formulation f = build_m1(triangle(), 2);
    const ExternalResult r = solve_external(f.model, shell(": > {solution}"));
    CHECK(r.status == ExternalStatus::ValidationFailure);
    CHECK(r.message.find("m1.card") != std::string::npos);
    CHECK_FALSE(r.assignment);
  }

  TEST_CASE("known optimum is accepted and the objective recomputed") {
    const Graph g = triangle();
    const ProblemSpec spec{DensestSubgraph{3}, Connectivity::None, std::nullopt};
    const std::string answer = "printf '# status: optimal\\nx_0 1\\nx_1 1\\nx_2 1\\ny_0_1 1\\ny_0_2 1\\ny_1_2 1\\n' > {solution}";
    const Solution s = solve_with_backend(g, spec, shell(answer));
    CHECK(s.status == SolveStatus::Optimal);
    CHECK(s.objective == 3);
    CHECK(s.vertices == VertexSet::all(3));
  }

  TEST_CASE("near-integral values within tolerance") {
    const Formulation f = build_m1(path3(), 2);
    const ExternalResult r =
        solve_external(f.model, shell("printf 'x_0 0.9999999999\\nx_1 1\\ny_0_1 1.0000000001\\n' > {solution}"));
    REQUIRE(r.status == ExternalStatus::Solved);
    CHECK(extract_vertex_set(f.layout, *r.assignment, Rational(1, 1000000)) == VertexSet({0, 1}, 3));
  }

  TEST_CASE("time limit kills the process") {
    const Formulation f = build_m1(triangle(), 2);
    const ExternalResult r = solve_external(f.model, shell("sleep 20", 0.2));
    CHECK(r.status == ExternalStatus::TimeLimit);
    CHECK_FALSE(r.assignment);
    CHECK(r.elapsed < 5);
  }

  TEST_CASE("distinct failure statuses") {
    const Formulation f = build_m1(triangle(), 2);
    CHECK(solve_external(f.model, shell("exit 3")).status == ExternalStatus::ProcessFailure);
    CHECK(solve_external(f.model, shell("true")).status == ExternalStatus::ProcessFailure);
    CHECK(solve_external(f.model, shell("echo '# status: infeasible' > {solution}")).status == ExternalStatus::Infeasible);
    CHECK(solve_external(f.model, shell("echo 'bogus 1' > {solution}")).status == ExternalStatus::ValidationFailure);
    CHECK(solve_external(f.model, shell("")).status == ExternalStatus::ProcessFailure);
    CHECK_THROWS_AS(solve_with_backend(triangle(), {DensestSubgraph{2}, Connectivity::None, std::nullopt}, shell("exit 1")),
                    BackendError);
  }

  TEST_CASE("placeholders and formats") {
    const Formulation f = build_m1(triangle(), 2);
    BackendConfig cfg = shell("grep -q 'Subject To' {model} && test {timelimit} = 7 && echo 'x_0 1' > {solution}", 7);
    cfg.format = ModelFormat::LP;
    // x_0 alone violates the cardinality row: the command ran and was validated.
    CHECK(solve_external(f.model, cfg).status == ExternalStatus::ValidationFailure);
    cfg.format = ModelFormat::MPS;
    CHECK(solve_external(f.model, cfg).status == ExternalStatus::ProcessFailure);
  }

  TEST_CASE("extract vertex set") {
    Formulation f = build_m1(triangle(), 2);
    Assignment a = Assignment::zeros(f.model);
    a.set(f.layout.x[0], 1);
    a.set(f.layout.x[1], 1);
    CHECK(extract_vertex_set(f.layout, a, Rational(1, 1000000)) == VertexSet({0, 1}, 3));
    a.set(f.layout.x[0], Rational(2, 5));
    CHECK_THROWS_AS(extract_vertex_set(f.layout, a, Rational(1, 1000000)), std::domain_error);
    a.set(f.layout.x[0], 1 - Rational(1, 1000000000));
    CHECK(extract_vertex_set(f.layout, a, Rational(1, 1000000)) == VertexSet({0, 1}, 3));
  }

  TEST_CASE("environment override") {
    setenv("QCLIQUE_BACKEND_CMD", "run {model}", 1);
    CHECK(BackendConfig::from_environment().command == "run {model}");
    unsetenv("QCLIQUE_BACKEND_CMD");
    CHECK(BackendConfig::from_environment().command.empty());
  }

  TEST_CASE("scipy backend solves the formulations") {
    if (!scipy_available()) {
      MESSAGE("python3 with scipy not found; skipping");
      return;
    }
    const Graph g = two_k4s_with_path();
    const BackendConfig cfg = shell(scipy_command(), 120);
    CHECK(solve_with_backend(g, {DensestSubgraph{8}, Connectivity::None, std::nullopt}, cfg).objective == 12);
    CHECK(solve_with_backend(g, {DensestSubgraph{8}, Connectivity::CFlow, std::nullopt}, cfg).objective == 10);
    CHECK(solve_with_backend(g, {MaxQuasiClique{Rational(3, 7)}, Connectivity::CSTree, std::nullopt}, cfg).objective == 7);
    const Graph split = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(solve_with_backend(split, {DensestSubgraph{5}, Connectivity::CFlow, std::nullopt}, cfg).status ==
          SolveStatus::Infeasible);
    LazyOptions lazy;
    lazy.backend = cfg;
    const Solution s = solve_lazy(g, 8, lazy);
    CHECK(s.objective == 10);
    CHECK(s.cut_rounds >= 1);
  }
}
