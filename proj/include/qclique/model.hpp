#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qclique/rational.hpp"

namespace qclique {

/// Stable handle of a model variable (its insertion index).
struct VarId {
  std::uint32_t index = 0;
  friend bool operator==(VarId, VarId) = default;
  friend auto operator<=>(VarId, VarId) = default;
};

enum class VarKind { Binary, Continuous };
enum class Sense { LessEqual, GreaterEqual, Equal };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  std::optional<Rational> lower;  // nullopt: -infinity
  std::optional<Rational> upper;  // nullopt: +infinity
};

struct Term {
  VarId var;
  Rational coef;
};

/// Sparse row. Terms are sorted by variable and never hold a zero coefficient.
struct LinearConstraint {
  std::vector<Term> terms;
  Sense sense = Sense::LessEqual;
  Rational rhs;
  std::string tag;
};

/// Merges repeated variables and drops zero coefficients.
std::vector<Term> normalize_terms(std::vector<Term> terms);

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solver-agnostic maximization MILP.
class LinearModel {
 public:
  VarId add_variable(std::string name, VarKind kind, std::optional<Rational> lower,
                     std::optional<Rational> upper);
  VarId add_binary(std::string name) { return add_variable(std::move(name), VarKind::Binary, Rational(0), Rational(1)); }
  VarId add_continuous(std::string name, std::optional<Rational> lower, std::optional<Rational> upper) {
    return add_variable(std::move(name), VarKind::Continuous, std::move(lower), std::move(upper));
  }

  /// Normalizes terms; throws ModelError if a term references an unknown variable.
  std::size_t add_constraint(std::vector<Term> terms, Sense sense, Rational rhs, std::string tag);
  std::size_t add_constraint(LinearConstraint row);
  void set_objective(std::vector<Term> terms);

  std::span<const Variable> variables() const { return variables_; }
  std::span<const LinearConstraint> constraints() const { return constraints_; }
  std::span<const Term> objective() const { return objective_; }
  const Variable& variable(VarId id) const { return variables_.at(id.index); }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  std::optional<VarId> find(std::string_view name) const;

  /// Free-form key/value annotations (problem, graph fingerprint). Exported as comments.
  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

 private:
  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  std::vector<Term> objective_;
  std::unordered_map<std::string, VarId> by_name_;
  std::map<std::string, std::string> metadata_;
};

/// Value for every model variable, indexed by VarId.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t num_variables) : values_(num_variables) {}
  static Assignment zeros(const LinearModel& m);

  void set(VarId id, Rational value) { values_.at(id.index) = std::move(value); }
  const std::optional<Rational>& get(VarId id) const { return values_.at(id.index); }
  /// Value or zero when unset.
  Rational value_or_zero(VarId id) const;
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<std::optional<Rational>> values_;
};

struct Violation {
  std::string tag;  // constraint tag, or "bound:<name>" for a variable bound
  Rational slack;   // negative: amount by which the requirement is missed
};

struct Evaluation {
  bool feasible = true;
  bool integral = true;
  Rational objective;
  std::vector<Violation> violated;
};

struct EvaluateOptions {
  Rational feasibility_tolerance{0};
  Rational integrality_tolerance{0};
};

/// Checks bounds, rows and binary integrality with exact arithmetic.
/// Throws ModelError when a variable has no value.
Evaluation evaluate(const LinearModel& m, const Assignment& a, const EvaluateOptions& options = {});

/// Signed slack of one row: >= 0 when satisfied.
Rational row_slack(const LinearConstraint& row, const Assignment& a);

struct ExportResult {
  std::string text;
  std::vector<std::string> warnings;
  /// Original name -> written name, for every name that had to be sanitized.
  std::map<std::string, std::string> renamed;
};

ExportResult export_lp(const LinearModel& m);
ExportResult export_mps(const LinearModel& m);

/// Readers for the dialects produced above. Variables keep the order in
/// which the exporter listed them, so export(read(export(m))) is stable.
LinearModel read_lp(std::string_view text);
LinearModel read_mps(std::string_view text);

/// "name value" lines; '#' starts a comment. Unlisted variables are zero.
/// Throws ModelError on unknown names or values that are not decimals.
Assignment parse_solution_file(const LinearModel& m, std::string_view text);

std::string write_solution_file(const LinearModel& m, const Assignment& a);

}  // namespace qclique
