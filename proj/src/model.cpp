#include "qclique/model.hpp"

#include <algorithm>
#include <sstream>

namespace qclique {

std::vector<Term> normalize_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
  return merged;
}

VarId LinearModel::add_variable(std::string name, VarKind kind, std::optional<Rational> lower,
                                std::optional<Rational> upper) {
  if (name.empty()) throw ModelError("empty variable name");
  if (by_name_.count(name)) throw ModelError("duplicate variable name: " + name);
  if (lower && upper && *lower > *upper) throw ModelError("lower bound exceeds upper bound for " + name);
  if (kind == VarKind::Binary) {
    if (!lower || *lower < 0 || !upper || *upper > 1) {
      throw ModelError("binary variable " + name + " needs bounds within [0,1]");
    }
  }
  VarId id{static_cast<std::uint32_t>(variables_.size())};
  by_name_.emplace(name, id);
  variables_.push_back(Variable{std::move(name), kind, std::move(lower), std::move(upper)});
  return id;
}

std::size_t LinearModel::add_constraint(std::vector<Term> terms, Sense sense, Rational rhs, std::string tag) {
  return add_constraint(LinearConstraint{std::move(terms), sense, std::move(rhs), std::move(tag)});
}

std::size_t LinearModel::add_constraint(LinearConstraint row) {
  for (const Term& t : row.terms) {
    if (t.var.index >= variables_.size()) throw ModelError("constraint " + row.tag + " references unknown variable");
  }
  row.terms = normalize_terms(std::move(row.terms));
  constraints_.push_back(std::move(row));
  return constraints_.size() - 1;
}

void LinearModel::set_objective(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.var.index >= variables_.size()) throw ModelError("objective references unknown variable");
  }
  objective_ = normalize_terms(std::move(terms));
}

std::optional<VarId> LinearModel::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Assignment Assignment::zeros(const LinearModel& m) {
  Assignment a(m.num_variables());
  for (std::uint32_t i = 0; i < m.num_variables(); ++i) a.set(VarId{i}, Rational(0));
  return a;
}

Rational Assignment::value_or_zero(VarId id) const {
  const auto& v = values_.at(id.index);
  return v ? *v : Rational(0);
}

namespace {

Rational activity(std::span<const Term> terms, const Assignment& a) {
  Rational sum = 0;
  for (const Term& t : terms) sum += t.coef * *a.get(t.var);
  return sum;
}

}  // namespace

Rational row_slack(const LinearConstraint& row, const Assignment& a) {
  Rational lhs = activity(row.terms, a);
  switch (row.sense) {
    case Sense::LessEqual:
      return row.rhs - lhs;
    case Sense::GreaterEqual:
      return lhs - row.rhs;
    case Sense::Equal:
      return lhs == row.rhs ? Rational(0) : Rational(-abs(lhs - row.rhs));
  }
  return 0;
}

Evaluation evaluate(const LinearModel& m, const Assignment& a, const EvaluateOptions& options) {
  if (a.size() != m.num_variables()) throw ModelError("assignment size does not match model");
  const Rational& feas_tol = options.feasibility_tolerance;
  Evaluation result;
  for (std::uint32_t i = 0; i < m.num_variables(); ++i) {
    const Variable& var = m.variables()[i];
    const auto& value = a.get(VarId{i});
    if (!value) throw ModelError("no value for variable " + var.name);
    if (var.lower && *value - *var.lower < -feas_tol) {
      result.violated.push_back({"bound:" + var.name, *value - *var.lower});
    }
    if (var.upper && *var.upper - *value < -feas_tol) {
      result.violated.push_back({"bound:" + var.name, *var.upper - *value});
    }
    if (var.kind == VarKind::Binary) {
      Rational off = std::min<Rational>(abs(*value), abs(Rational(*value - 1)));
      if (off > options.integrality_tolerance) result.integral = false;
    }
  }
  for (const LinearConstraint& row : m.constraints()) {
    Rational slack = row_slack(row, a);
    if (slack < -feas_tol) result.violated.push_back({row.tag, slack});
  }
  result.feasible = result.violated.empty();
  result.objective = activity(m.objective(), a);
  return result;
}

Assignment parse_solution_file(const LinearModel& m, std::string_view text) {
  Assignment a = Assignment::zeros(m);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    std::string value_text;
    if (!(fields >> name)) continue;
    std::string extra;
    if (!(fields >> value_text) || (fields >> extra)) {
      throw ModelError("solution line " + std::to_string(line_no) + ": expected 'name value'");
    }
    auto id = m.find(name);
    if (!id) throw ModelError("solution line " + std::to_string(line_no) + ": unknown variable " + name);
    auto value = parse_rational(value_text);
    if (!value) {
      throw ModelError("solution line " + std::to_string(line_no) + ": cannot parse value '" + value_text + "'");
    }
    a.set(*id, *value);
  }
  return a;
}

std::string write_solution_file(const LinearModel& m, const Assignment& a) {
  std::ostringstream out;
  for (std::uint32_t i = 0; i < m.num_variables(); ++i) {
    const auto& v = a.get(VarId{i});
    if (!v || *v == 0) continue;
    out << m.variables()[i].name << ' ' << format_decimal(*v).text << '\n';
  }
  return out.str();
}

}  // namespace qclique
