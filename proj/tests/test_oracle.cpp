#include <doctest.h>

#include <random>

#include "support/exact_lp.hpp"

using namespace qclique;
using namespace qclique::testing;

namespace {

LpRow row(std::vector<std::pair<std::size_t, Rational>> terms, Sense sense, Rational rhs) {
  return LpRow{std::move(terms), sense, std::move(rhs)};
}

using Bounds = std::vector<std::optional<Rational>>;

bool satisfies(const LpRow& r, const Rational& x, const Rational& y) {
  Rational lhs = 0;
  for (const auto& [var, coef] : r.terms) lhs += coef * (var == 0 ? x : y);
  switch (r.sense) {
    case Sense::LessEqual:
      return lhs <= r.rhs;
    case Sense::GreaterEqual:
      return lhs >= r.rhs;
    case Sense::Equal:
      return lhs == r.rhs;
  }
  return false;
}

/// A nonempty polygon inside a box has a vertex where two of its lines meet.
bool polygon_feasible(const std::vector<LpRow>& rows, const Rational& box) {
  std::vector<std::array<Rational, 3>> lines;  // a x + b y = c
  for (const LpRow& r : rows) {
    Rational a = 0, b = 0;
    for (const auto& [var, coef] : r.terms) (var == 0 ? a : b) += coef;
    lines.push_back({a, b, r.rhs});
  }
  lines.push_back({1, 0, box});
  lines.push_back({1, 0, -box});
  lines.push_back({0, 1, box});
  lines.push_back({0, 1, -box});
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& [a1, b1, c1] = lines[i];
      const auto& [a2, b2, c2] = lines[j];
      const Rational det = a1 * b2 - a2 * b1;
      if (det == 0) continue;
      const Rational x = (c1 * b2 - c2 * b1) / det;
      const Rational y = (a1 * c2 - a2 * c1) / det;
      if (abs(x) > box || abs(y) > box) continue;
      bool ok = true;
      for (const LpRow& r : rows) ok = ok && satisfies(r, x, y);
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("hand-checked linear programs") {
    const Bounds zero{Rational(0), Rational(0)};
    const Bounds none{std::nullopt, std::nullopt};
    CHECK_FALSE(lp_feasible(2, {row({{0, 1}, {1, 1}}, Sense::LessEqual, 1)}, {Rational(3, 5), Rational(3, 5)}, none));
    CHECK(lp_feasible(2, {row({{0, 1}, {1, 1}}, Sense::Equal, 1), row({{0, 1}, {1, -1}}, Sense::Equal, 0)}, none, none));
    CHECK_FALSE(lp_feasible(1, {}, {Rational(2)}, {Rational(1)}));
    const std::vector<LpRow> free_pair{row({{0, 1}, {1, -1}}, Sense::Equal, -5), row({{0, 1}, {1, 1}}, Sense::Equal, 1)};
    CHECK(lp_feasible(2, free_pair, none, none));
    CHECK_FALSE(lp_feasible(2, free_pair, zero, none));
    CHECK(lp_feasible(2, {row({{0, 2}, {1, 3}}, Sense::GreaterEqual, 7)}, zero, {Rational(2), Rational(1)}));
    CHECK_FALSE(lp_feasible(2, {row({{0, 2}, {1, 3}}, Sense::GreaterEqual, 8)}, zero, {Rational(2), Rational(1)}));
  }

  TEST_CASE("random two-variable programs agree with vertex enumeration") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> sense(0, 2);
    const Rational box = 3;
    const Rational neg = -3;
    int feasible = 0;
    for (int round = 0; round < 400; ++round) {
      std::vector<LpRow> rows;
      const int count = 1 + round % 5;
      for (int i = 0; i < count; ++i) {
        rows.push_back(row({{0, Rational(coef(rng))}, {1, Rational(coef(rng))}}, static_cast<Sense>(sense(rng)),
                           Rational(coef(rng), 1 + round % 3)));
      }
      const bool expected = polygon_feasible(rows, box);
      feasible += expected;
      CHECK(lp_feasible(2, rows, {neg, neg}, {box, box}) == expected);
    }
    CHECK(feasible > 50);
    CHECK(feasible < 350);
  }

  TEST_CASE("binary completion") {
    LinearModel m;
    const VarId b1 = m.add_binary("b1");
    const VarId b2 = m.add_binary("b2");
    const VarId f = m.add_continuous("f", Rational(0), std::nullopt);
    m.add_constraint({{f, 1}, {b1, -2}}, Sense::LessEqual, 0, "cap");
    m.add_constraint({{f, 1}}, Sense::GreaterEqual, Rational(3, 2), "need");
    m.add_constraint({{b1, 1}, {b2, 1}}, Sense::LessEqual, 1, "pick");
    std::vector<std::optional<Rational>> fixed(m.num_variables());
    CHECK(exists_completion(m, fixed));
    fixed[b1.index] = Rational(0);
    CHECK_FALSE(exists_completion(m, fixed));
    fixed[b1.index] = std::nullopt;
    fixed[b2.index] = Rational(1);
    CHECK_FALSE(exists_completion(m, fixed));
    fixed[b2.index] = std::nullopt;
    fixed[f.index] = Rational(5, 2);
    CHECK_FALSE(exists_completion(m, fixed));

    LinearModel tight;
    const VarId c = tight.add_binary("c");
    const VarId g = tight.add_continuous("g", Rational(0), Rational(1));
    tight.add_constraint({{g, 1}, {c, -1}}, Sense::LessEqual, 0, "cap");
    tight.add_constraint({{g, 1}}, Sense::GreaterEqual, Rational(3, 2), "need");
    CHECK_FALSE(exists_completion(tight, std::vector<std::optional<Rational>>(tight.num_variables())));
  }
}
