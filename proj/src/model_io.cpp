// LP (CPLEX-style) and free-MPS writers and the matching readers.

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qclique/model.hpp"

namespace qclique {

namespace {

constexpr std::size_t kTermsPerLine = 8;

bool name_char_ok(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '#';
}

std::string sanitize(const std::string& original) {
  std::string name = original;
  for (char& c : name) {
    if (!name_char_ok(c)) c = '_';
  }
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])) || name[0] == '.' ||
      ((name[0] == 'e' || name[0] == 'E') && name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1])))) {
    name = "n_" + name;
  }
  return name;
}

/// Maps model names to names every LP/MPS reader accepts. Names that are
/// already acceptable keep their spelling; the rest are rewritten around them.
std::vector<std::string> assign_unique(const std::vector<std::string>& originals, std::set<std::string> used,
                                       ExportResult& result) {
  std::vector<std::string> out(originals.size());
  for (std::size_t i = 0; i < originals.size(); ++i) {
    if (sanitize(originals[i]) == originals[i] && used.insert(originals[i]).second) out[i] = originals[i];
  }
  for (std::size_t i = 0; i < originals.size(); ++i) {
    if (!out[i].empty()) continue;
    const std::string base = sanitize(originals[i]);
    std::string name = base;
    for (int k = 1; used.count(name); ++k) name = base + "#" + std::to_string(k);
    used.insert(name);
    out[i] = name;
    result.renamed.emplace(originals[i], name);
  }
  return out;
}

struct Names {
  std::vector<std::string> vars;
  std::vector<std::string> rows;
};

Names assign_names(const LinearModel& m, ExportResult& result) {
  std::vector<std::string> vars;
  for (const Variable& v : m.variables()) vars.push_back(v.name);
  std::vector<std::string> rows;
  std::size_t index = 0;
  for (const LinearConstraint& row : m.constraints()) {
    rows.push_back(row.tag.empty() ? "r" + std::to_string(index) : row.tag);
    ++index;
  }
  Names names;
  names.vars = assign_unique(vars, {}, result);
  names.rows = assign_unique(rows, {"obj"}, result);
  return names;
}

std::string number(const Rational& value, std::string_view where, ExportResult& result) {
  DecimalText text = format_decimal(value);
  if (!text.exact) {
    result.warnings.push_back(std::string(where) + ": " + format_fraction(value) + " written as " + text.text);
  }
  return text.text;
}

void write_metadata(std::ostringstream& out, const LinearModel& m, std::string_view prefix) {
  for (const auto& [key, value] : m.metadata()) {
    std::string k = key;
    std::replace(k.begin(), k.end(), ' ', '_');
    out << prefix << " meta " << k << ' ' << value << '\n';
  }
}

void write_lp_terms(std::ostringstream& out, std::span<const Term> terms, const Names& names,
                    std::string_view where, ExportResult& result) {
  std::size_t count = 0;
  for (const Term& t : terms) {
    if (count > 0 && count % kTermsPerLine == 0) out << "\n   ";
    out << (t.coef < 0 ? " - " : " + ") << number(abs(t.coef), where, result) << ' ' << names.vars[t.var.index];
    ++count;
  }
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::LessEqual:
      return "<=";
    case Sense::GreaterEqual:
      return ">=";
    case Sense::Equal:
      return "=";
  }
  return "=";
}

}  // namespace

ExportResult export_lp(const LinearModel& m) {
  if (m.num_variables() == 0) throw ModelError("cannot export a model without variables");
  ExportResult result;
  Names names = assign_names(m, result);
  std::ostringstream out;
  write_metadata(out, m, "\\");
  out << "Maximize\n obj:";
  write_lp_terms(out, m.objective(), names, "objective", result);
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < m.num_constraints(); ++r) {
    const LinearConstraint& row = m.constraints()[r];
    out << ' ' << names.rows[r] << ':';
    if (row.terms.empty()) {
      out << " + 0 " << names.vars[0];
    } else {
      write_lp_terms(out, row.terms, names, names.rows[r], result);
    }
    out << ' ' << sense_text(row.sense) << ' ' << number(row.rhs, names.rows[r], result) << '\n';
  }
  out << "Bounds\n";
  for (std::size_t i = 0; i < m.num_variables(); ++i) {
    const Variable& v = m.variables()[i];
    const std::string& name = names.vars[i];
    std::string where = "bound " + name;
    if (v.lower && v.upper) {
      out << ' ' << number(*v.lower, where, result) << " <= " << name << " <= " << number(*v.upper, where, result) << '\n';
    } else if (v.lower) {
      out << ' ' << name << " >= " << number(*v.lower, where, result) << '\n';
    } else if (v.upper) {
      out << " -inf <= " << name << " <= " << number(*v.upper, where, result) << '\n';
    } else {
      out << ' ' << name << " free\n";
    }
  }
  std::size_t binaries = 0;
  for (std::size_t i = 0; i < m.num_variables(); ++i) {
    if (m.variables()[i].kind != VarKind::Binary) continue;
    if (binaries == 0) out << "Binaries\n";
    out << ' ' << names.vars[i];
    if (++binaries % kTermsPerLine == 0) out << '\n';
  }
  if (binaries % kTermsPerLine != 0) out << '\n';
  out << "End\n";
  result.text = out.str();
  return result;
}

ExportResult export_mps(const LinearModel& m) {
  if (m.num_variables() == 0) throw ModelError("cannot export a model without variables");
  ExportResult result;
  Names names = assign_names(m, result);

  // Column-wise view of the rows.
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> columns(m.num_variables());
  for (std::size_t r = 0; r < m.num_constraints(); ++r) {
    for (const Term& t : m.constraints()[r].terms) columns[t.var.index].emplace_back(r, &t.coef);
  }
  std::vector<const Rational*> objective(m.num_variables(), nullptr);
  for (const Term& t : m.objective()) objective[t.var.index] = &t.coef;

  std::ostringstream out;
  write_metadata(out, m, "*");
  out << "NAME qclique\nOBJSENSE\n    MAX\nROWS\n N  obj\n";
  for (std::size_t r = 0; r < m.num_constraints(); ++r) {
    const char* code = "E";
    if (m.constraints()[r].sense == Sense::LessEqual) code = "L";
    if (m.constraints()[r].sense == Sense::GreaterEqual) code = "G";
    out << ' ' << code << "  " << names.rows[r] << '\n';
  }
  out << "COLUMNS\n";
  bool in_integer_block = false;
  int marker = 0;
  for (std::size_t i = 0; i < m.num_variables(); ++i) {
    const bool binary = m.variables()[i].kind == VarKind::Binary;
    if (binary != in_integer_block) {
      out << "    MARKER" << marker++ << "  'MARKER'  " << (binary ? "'INTORG'" : "'INTEND'") << '\n';
      in_integer_block = binary;
    }
    const std::string& name = names.vars[i];
    bool wrote = false;
    if (objective[i]) {
      out << "    " << name << "  obj  " << number(*objective[i], "objective", result) << '\n';
      wrote = true;
    }
    for (auto [r, coef] : columns[i]) {
      out << "    " << name << "  " << names.rows[r] << "  " << number(*coef, names.rows[r], result) << '\n';
      wrote = true;
    }
    if (!wrote) out << "    " << name << "  obj  0\n";
  }
  if (in_integer_block) out << "    MARKER" << marker++ << "  'MARKER'  'INTEND'\n";
  out << "RHS\n";
  for (std::size_t r = 0; r < m.num_constraints(); ++r) {
    const Rational& rhs = m.constraints()[r].rhs;
    if (rhs != 0) out << "    RHS  " << names.rows[r] << "  " << number(rhs, names.rows[r], result) << '\n';
  }
  out << "BOUNDS\n";
  for (std::size_t i = 0; i < m.num_variables(); ++i) {
    const Variable& v = m.variables()[i];
    const std::string& name = names.vars[i];
    std::string where = "bound " + name;
    if (v.kind == VarKind::Binary && *v.lower == 0 && *v.upper == 1) {
      out << " BV BND  " << name << '\n';
      continue;
    }
    if (v.lower && v.upper && *v.lower == *v.upper) {
      out << " FX BND  " << name << "  " << number(*v.lower, where, result) << '\n';
      continue;
    }
    if (!v.lower && !v.upper) {
      out << " FR BND  " << name << '\n';
      continue;
    }
    if (!v.lower) {
      out << " MI BND  " << name << '\n';
    } else if (*v.lower != 0 || v.kind == VarKind::Binary) {
      out << " LO BND  " << name << "  " << number(*v.lower, where, result) << '\n';
    }
    if (v.upper) out << " UP BND  " << name << "  " << number(*v.upper, where, result) << '\n';
  }
  out << "ENDATA\n";
  result.text = out.str();
  return result;
}

namespace {

struct PendingVar {
  std::string name;
  VarKind kind = VarKind::Continuous;
  std::optional<Rational> lower{Rational(0)};
  std::optional<Rational> upper;
};

/// Accumulates variables in first-mention order while a reader runs.
class VarCollector {
 public:
  PendingVar& get(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return vars_[it->second];
    index_.emplace(name, vars_.size());
    PendingVar fresh;
    fresh.name = name;
    vars_.push_back(std::move(fresh));
    return vars_.back();
  }
  std::size_t index_of(const std::string& name) {
    get(name);
    return index_.at(name);
  }
  const std::vector<PendingVar>& vars() const { return vars_; }

 private:
  std::vector<PendingVar> vars_;
  std::unordered_map<std::string, std::size_t> index_;
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

std::string lower_case(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Rational need_number(const std::string& text, const std::string& context) {
  auto v = parse_rational(text);
  if (!v) throw ModelError(context + ": expected a number, found '" + text + "'");
  return *v;
}

std::optional<Rational> bound_value(const std::string& text, const std::string& context) {
  std::string t = lower_case(text);
  if (t == "inf" || t == "+inf" || t == "infinity" || t == "+infinity" || t == "-inf" || t == "-infinity") {
    return std::nullopt;
  }
  return need_number(text, context);
}

bool is_sense(const std::string& t) {
  return t == "<=" || t == ">=" || t == "=" || t == "<" || t == ">" || t == "=<" || t == "=>";
}

/// True once a row has its comparison and a right-hand side.
bool row_complete(const std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_sense(tokens[i])) return i + 1 < tokens.size() && tokens.back() != "-" && tokens.back() != "+";
  }
  return false;
}

Sense sense_of(const std::string& t) {
  if (t == "<=" || t == "<" || t == "=<") return Sense::LessEqual;
  if (t == ">=" || t == ">" || t == "=>") return Sense::GreaterEqual;
  return Sense::Equal;
}

struct ParsedRow {
  std::string name;
  std::vector<std::pair<std::size_t, Rational>> terms;
  Sense sense = Sense::Equal;
  Rational rhs;
};

/// Parses "[name:] (+|-)? coef? var ... [sense rhs]" from a token run.
ParsedRow parse_lp_expression(std::vector<std::string> tokens, VarCollector& vars, bool expect_sense) {
  ParsedRow row;
  std::size_t i = 0;
  if (!tokens.empty()) {
    auto colon = tokens[0].find(':');
    if (colon != std::string::npos) {
      row.name = tokens[0].substr(0, colon);
      std::string rest = tokens[0].substr(colon + 1);
      if (rest.empty()) {
        i = 1;
      } else {
        tokens[0] = rest;
      }
    } else if (tokens.size() > 1 && tokens[1] == ":") {
      row.name = tokens[0];
      i = 2;
    }
  }
  Rational sign = 1;
  std::optional<Rational> coef;
  Rational constant = 0;
  for (; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (is_sense(t)) {
      if (!expect_sense) throw ModelError("unexpected comparison in objective");
      if (coef) constant += sign * *coef;
      if (i + 1 >= tokens.size()) throw ModelError("row " + row.name + ": missing right-hand side");
      std::string rhs_text = tokens[i + 1];
      std::size_t consumed = 2;
      if ((rhs_text == "-" || rhs_text == "+") && i + 2 < tokens.size()) {
        rhs_text += tokens[i + 2];
        consumed = 3;
      }
      if (i + consumed != tokens.size()) throw ModelError("row " + row.name + ": trailing tokens");
      row.sense = sense_of(t);
      row.rhs = need_number(rhs_text, "row " + row.name) - constant;
      return row;
    }
    if (t == "+" || t == "-") {
      if (coef) {
        constant += sign * *coef;
        coef.reset();
      }
      sign = t == "-" ? Rational(-1) : Rational(1);
      continue;
    }
    if (auto value = parse_rational(t)) {
      coef = coef ? *coef * *value : *value;
      continue;
    }
    row.terms.emplace_back(vars.index_of(t), sign * (coef ? *coef : Rational(1)));
    sign = 1;
    coef.reset();
  }
  if (expect_sense) throw ModelError("row " + row.name + ": missing comparison");
  return row;
}

LinearModel assemble(const VarCollector& vars, const std::vector<std::size_t>& order,
                     const std::vector<ParsedRow>& rows, const ParsedRow& objective,
                     const std::map<std::string, std::string>& metadata) {
  LinearModel m;
  std::vector<VarId> ids(vars.vars().size());
  for (std::size_t pos : order) {
    const PendingVar& v = vars.vars()[pos];
    ids[pos] = m.add_variable(v.name, v.kind, v.lower, v.upper);
  }
  auto convert = [&](const std::vector<std::pair<std::size_t, Rational>>& terms) {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& [pos, coef] : terms) out.push_back(Term{ids[pos], coef});
    return out;
  };
  for (const ParsedRow& row : rows) m.add_constraint(convert(row.terms), row.sense, row.rhs, row.name);
  m.set_objective(convert(objective.terms));
  m.metadata() = metadata;
  return m;
}

void read_metadata_comment(const std::string& body, std::map<std::string, std::string>& metadata) {
  std::istringstream ss(body);
  std::string word;
  std::string key;
  if (!(ss >> word) || word != "meta" || !(ss >> key)) return;
  std::string value;
  std::getline(ss, value);
  if (!value.empty() && value[0] == ' ') value.erase(0, 1);
  metadata[key] = value;
}

}  // namespace

LinearModel read_lp(std::string_view text) {
  enum class Section { None, Objective, Constraints, Bounds, Binaries, End };
  Section section = Section::None;
  VarCollector vars;
  std::vector<std::size_t> bound_order;
  std::unordered_set<std::size_t> in_bounds;
  std::vector<ParsedRow> rows;
  ParsedRow objective;
  std::vector<std::string> pending;  // tokens of the row being read
  std::vector<std::string> objective_tokens;
  std::map<std::string, std::string> metadata;

  auto flush_row = [&]() {
    if (pending.empty()) return;
    rows.push_back(parse_lp_expression(pending, vars, true));
    pending.clear();
  };
  auto mark_bound = [&](const std::string& name) {
    std::size_t pos = vars.index_of(name);
    if (in_bounds.insert(pos).second) bound_order.push_back(pos);
    return pos;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto bs = line.find('\\'); bs != std::string::npos) {
      read_metadata_comment(line.substr(bs + 1), metadata);
      line.erase(bs);
    }
    auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    std::string head = lower_case(tokens[0]);
    std::string joined = lower_case(line);
    joined.erase(0, joined.find_first_not_of(" \t"));
    joined.erase(joined.find_last_not_of(" \t\r") + 1);
    if (joined == "maximize" || joined == "maximum" || joined == "max") {
      section = Section::Objective;
      continue;
    }
    if (joined == "minimize" || joined == "minimum" || joined == "min") {
      throw ModelError("only maximization models are supported");
    }
    if (joined == "subject to" || joined == "such that" || joined == "st" || joined == "s.t.") {
      section = Section::Constraints;
      continue;
    }
    if (joined == "bounds" || joined == "bound") {
      flush_row();
      section = Section::Bounds;
      continue;
    }
    if (joined == "binaries" || joined == "binary" || joined == "bin") {
      flush_row();
      section = Section::Binaries;
      continue;
    }
    if (joined == "generals" || joined == "general" || joined == "gen" || joined == "semi-continuous") {
      throw ModelError("section '" + tokens[0] + "' is not supported");
    }
    if (joined == "end") {
      flush_row();
      section = Section::End;
      continue;
    }
    switch (section) {
      case Section::None:
      case Section::End:
        throw ModelError("content outside of a section: " + line);
      case Section::Objective:
        objective_tokens.insert(objective_tokens.end(), tokens.begin(), tokens.end());
        break;
      case Section::Constraints:
        // A new row starts with "name:"; anything else continues the current one.
        if (tokens[0].find(':') != std::string::npos || (tokens.size() > 1 && tokens[1] == ":") ||
            row_complete(pending)) {
          flush_row();
        }
        pending.insert(pending.end(), tokens.begin(), tokens.end());
        break;
      case Section::Bounds: {
        if (tokens.size() == 2 && lower_case(tokens[1]) == "free") {
          PendingVar& v = vars.get(tokens[0]);
          mark_bound(tokens[0]);
          v.lower.reset();
          v.upper.reset();
        } else if (tokens.size() == 5 && is_sense(tokens[1]) && is_sense(tokens[3])) {
          mark_bound(tokens[2]);
          PendingVar& v = vars.get(tokens[2]);
          v.lower = bound_value(tokens[0], "bound " + tokens[2]);
          v.upper = bound_value(tokens[4], "bound " + tokens[2]);
        } else if (tokens.size() == 3 && is_sense(tokens[1])) {
          bool var_first = !parse_rational(tokens[0]) && lower_case(tokens[0]).find("inf") == std::string::npos;
          const std::string& name = var_first ? tokens[0] : tokens[2];
          const std::string& value = var_first ? tokens[2] : tokens[0];
          mark_bound(name);
          PendingVar& v = vars.get(name);
          Sense s = sense_of(tokens[1]);
          if (!var_first && s != Sense::Equal) s = s == Sense::LessEqual ? Sense::GreaterEqual : Sense::LessEqual;
          auto b = bound_value(value, "bound " + name);
          if (s == Sense::Equal) {
            v.lower = b;
            v.upper = b;
          } else if (s == Sense::GreaterEqual) {
            v.lower = b;
          } else {
            v.upper = b;
          }
        } else {
          throw ModelError("cannot parse bound: " + line);
        }
        break;
      }
      case Section::Binaries:
        for (const auto& name : tokens) {
          PendingVar& v = vars.get(name);
          v.kind = VarKind::Binary;
          if (!v.lower || *v.lower < 0) v.lower = Rational(0);
          if (!v.upper || *v.upper > 1) v.upper = Rational(1);
        }
        break;
    }
  }
  flush_row();
  if (section != Section::End) throw ModelError("missing End");
  objective = parse_lp_expression(objective_tokens, vars, false);

  std::vector<std::size_t> order = bound_order;
  for (std::size_t pos = 0; pos < vars.vars().size(); ++pos) {
    if (!in_bounds.count(pos)) order.push_back(pos);
  }
  return assemble(vars, order, rows, objective, metadata);
}

LinearModel read_mps(std::string_view text) {
  enum class Section { None, Name, ObjSense, Rows, Columns, Rhs, Bounds, End };
  Section section = Section::None;
  VarCollector vars;
  std::vector<std::size_t> order;
  std::unordered_set<std::size_t> ordered;
  std::vector<ParsedRow> rows;
  std::unordered_map<std::string, std::size_t> row_index;
  std::string objective_name;
  ParsedRow objective;
  bool integer_block = false;
  std::map<std::string, std::string> metadata;

  auto column = [&](const std::string& name) {
    std::size_t pos = vars.index_of(name);
    if (ordered.insert(pos).second) order.push_back(pos);
    return pos;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '*') {
      read_metadata_comment(line.substr(1), metadata);
      continue;
    }
    auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    const bool header = !std::isspace(static_cast<unsigned char>(line[0]));
    auto fail = [&](const std::string& what) {
      return ModelError("MPS line " + std::to_string(line_no) + ": " + what);
    };
    if (header) {
      std::string key = tokens[0];
      if (key == "NAME") section = Section::Name;
      else if (key == "OBJSENSE") {
        section = Section::ObjSense;
        if (tokens.size() > 1 && tokens[1] != "MAX" && tokens[1] != "MAXIMIZE") throw fail("only MAX is supported");
      } else if (key == "ROWS") section = Section::Rows;
      else if (key == "COLUMNS") section = Section::Columns;
      else if (key == "RHS") section = Section::Rhs;
      else if (key == "BOUNDS") section = Section::Bounds;
      else if (key == "ENDATA") section = Section::End;
      else throw fail("unsupported section " + key);
      continue;
    }
    switch (section) {
      case Section::ObjSense:
        if (tokens[0] != "MAX" && tokens[0] != "MAXIMIZE") throw fail("only MAX is supported");
        break;
      case Section::Rows: {
        if (tokens.size() != 2) throw fail("malformed row");
        if (tokens[0] == "N") {
          if (!objective_name.empty()) throw fail("more than one objective row");
          objective_name = tokens[1];
          break;
        }
        ParsedRow row;
        row.name = tokens[1];
        if (tokens[0] == "L") row.sense = Sense::LessEqual;
        else if (tokens[0] == "G") row.sense = Sense::GreaterEqual;
        else if (tokens[0] == "E") row.sense = Sense::Equal;
        else throw fail("unknown row type " + tokens[0]);
        row_index.emplace(row.name, rows.size());
        rows.push_back(std::move(row));
        break;
      }
      case Section::Columns: {
        if (tokens.size() >= 3 && tokens[1] == "'MARKER'") {
          if (tokens[2] == "'INTORG'") integer_block = true;
          else if (tokens[2] == "'INTEND'") integer_block = false;
          else throw fail("unknown marker");
          break;
        }
        if (tokens.size() != 3 && tokens.size() != 5) throw fail("malformed column entry");
        std::size_t pos = column(tokens[0]);
        if (integer_block) {
          PendingVar& v = vars.get(tokens[0]);
          if (v.kind != VarKind::Binary) {
            v.kind = VarKind::Binary;
            v.upper = Rational(1);
          }
        }
        for (std::size_t k = 1; k + 1 < tokens.size(); k += 2) {
          Rational coef = need_number(tokens[k + 1], "column " + tokens[0]);
          if (tokens[k] == objective_name) {
            objective.terms.emplace_back(pos, coef);
          } else {
            auto it = row_index.find(tokens[k]);
            if (it == row_index.end()) throw fail("unknown row " + tokens[k]);
            rows[it->second].terms.emplace_back(pos, coef);
          }
        }
        break;
      }
      case Section::Rhs: {
        if (tokens.size() != 3 && tokens.size() != 5) throw fail("malformed rhs entry");
        for (std::size_t k = 1; k + 1 < tokens.size(); k += 2) {
          auto it = row_index.find(tokens[k]);
          if (it == row_index.end()) throw fail("unknown row " + tokens[k]);
          rows[it->second].rhs = need_number(tokens[k + 1], "rhs " + tokens[k]);
        }
        break;
      }
      case Section::Bounds: {
        if (tokens.size() < 3) throw fail("malformed bound");
        const std::string& type = tokens[0];
        const std::string& name = tokens[2];
        column(name);
        PendingVar& v = vars.get(name);
        auto value = [&]() {
          if (tokens.size() < 4) throw fail("bound " + type + " needs a value");
          return need_number(tokens[3], "bound " + name);
        };
        if (type == "BV") {
          v.kind = VarKind::Binary;
          v.lower = Rational(0);
          v.upper = Rational(1);
        } else if (type == "FR") {
          v.lower.reset();
          v.upper.reset();
        } else if (type == "MI") {
          v.lower.reset();
        } else if (type == "PL") {
          v.upper.reset();
        } else if (type == "LO") {
          v.lower = value();
        } else if (type == "UP") {
          v.upper = value();
        } else if (type == "FX") {
          v.lower = value();
          v.upper = v.lower;
        } else {
          throw fail("unsupported bound type " + type);
        }
        break;
      }
      case Section::Name:
      case Section::None:
      case Section::End:
        throw fail("unexpected data line");
    }
  }
  if (section != Section::End) throw ModelError("missing ENDATA");
  return assemble(vars, order, rows, objective, metadata);
}

}  // namespace qclique
