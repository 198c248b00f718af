#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "qclique/solver.hpp"

namespace qclique {

namespace fs = std::filesystem;

std::string to_string(ExternalStatus s) {
  switch (s) {
    case ExternalStatus::Solved:
      return "Solved";
    case ExternalStatus::TimeLimit:
      return "TimeLimit";
    case ExternalStatus::Infeasible:
      return "Infeasible";
    case ExternalStatus::ProcessFailure:
      return "ProcessFailure";
    case ExternalStatus::ValidationFailure:
      return "ValidationFailure";
  }
  return "ProcessFailure";
}

BackendConfig BackendConfig::from_environment() {
  BackendConfig cfg;
  if (const char* cmd = std::getenv("QCLIQUE_BACKEND_CMD")) cfg.command = cmd;
  return cfg;
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string format_seconds(double seconds) {
  std::ostringstream out;
  out << seconds;
  return out.str();
}

std::string substitute(std::string command, const std::string& key, const std::string& value) {
  for (std::size_t pos = command.find(key); pos != std::string::npos; pos = command.find(key, pos + value.size())) {
    command.replace(pos, key.size(), value);
  }
  return command;
}

class TempDir {
 public:
  TempDir() {
    std::string pattern = (fs::temp_directory_path() / "qclique-XXXXXX").string();
    if (mkdtemp(pattern.data()) == nullptr) throw std::runtime_error("cannot create temporary directory");
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct ProcessOutcome {
  bool timed_out = false;
  int exit_code = 0;
  bool signalled = false;
};

ProcessOutcome run_command(const std::string& command, double wall_limit) {
  const pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    setpgid(0, 0);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(wall_limit);
  ProcessOutcome outcome;
  int status = 0;
  for (;;) {
    const pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      outcome.timed_out = true;
      return outcome;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  if (WIFEXITED(status)) {
    outcome.exit_code = WEXITSTATUS(status);
  } else {
    outcome.signalled = true;
  }
  return outcome;
}

/// Maps written names back to model names when the exporter had to rename.
std::string restore_names(const std::string& text, const std::map<std::string, std::string>& renamed) {
  if (renamed.empty()) return text;
  std::map<std::string, std::string> back;
  for (const auto& [original, written] : renamed) back[written] = original;
  std::istringstream in(text);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string name;
    fields >> name;
    auto it = back.find(name);
    if (!name.empty() && name.front() != '#' && it != back.end()) {
      std::string rest;
      std::getline(fields, rest);
      line = it->second + rest;
    }
    out += line;
    out += '\n';
  }
  return out;
}

/// Word after "# status:" on the first such comment line, lower-cased.
std::optional<std::string> status_word(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find("# status:");
    if (pos == std::string::npos) continue;
    std::istringstream fields(line.substr(pos + 9));
    std::string word;
    fields >> word;
    for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return word;
  }
  return std::nullopt;
}

bool has_values(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') return true;
  }
  return false;
}

}  // namespace

ExternalResult solve_external(const LinearModel& m, const BackendConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ExternalResult result;
  auto finish = [&](ExternalStatus status, std::string message) {
    result.status = status;
    result.message = std::move(message);
    result.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };
  if (cfg.command.empty()) return finish(ExternalStatus::ProcessFailure, "no backend command configured");

  TempDir dir;
  const bool mps = cfg.format == ModelFormat::MPS;
  const ExportResult exported = mps ? export_mps(m) : export_lp(m);
  const fs::path model_path = dir.path() / (mps ? "model.mps" : "model.lp");
  const fs::path solution_path = cfg.solution_path.empty() ? dir.path() / "solution.txt" : fs::path(cfg.solution_path);
  {
    std::ofstream out(model_path);
    out << exported.text;
    if (!out) return finish(ExternalStatus::ProcessFailure, "cannot write model file");
  }
  std::error_code ec;
  fs::remove(solution_path, ec);

  std::string command = cfg.command;
  command = substitute(command, "{model}", shell_quote(model_path.string()));
  command = substitute(command, "{solution}", shell_quote(solution_path.string()));
  command = substitute(command, "{timelimit}", format_seconds(cfg.time_limit));

  const ProcessOutcome outcome = run_command(command, cfg.time_limit + cfg.kill_grace);
  if (outcome.timed_out) return finish(ExternalStatus::TimeLimit, "backend killed after the time limit");
  if (outcome.signalled) return finish(ExternalStatus::ProcessFailure, "backend terminated by a signal");
  if (outcome.exit_code != 0) {
    return finish(ExternalStatus::ProcessFailure, "backend exited with code " + std::to_string(outcome.exit_code));
  }

  std::ifstream in(solution_path);
  if (!in) return finish(ExternalStatus::ProcessFailure, "backend wrote no solution file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = restore_names(buffer.str(), exported.renamed);

  const std::optional<std::string> word = status_word(text);
  if (word == "infeasible") return finish(ExternalStatus::Infeasible, "backend reported infeasible");
  const bool limit_hit = word == "time_limit";
  if (limit_hit && !has_values(text)) return finish(ExternalStatus::TimeLimit, "backend hit its time limit");
  if (word && *word != "optimal" && *word != "feasible" && !limit_hit) {
    return finish(ExternalStatus::ProcessFailure, "unknown backend status '" + *word + "'");
  }

  Assignment a;
  try {
    a = parse_solution_file(m, text);
  } catch (const ModelError& e) {
    return finish(ExternalStatus::ValidationFailure, e.what());
  }
  const Evaluation eval =
      evaluate(m, a, EvaluateOptions{Rational(cfg.feasibility_tolerance), Rational(cfg.integrality_tolerance)});
  if (!eval.feasible) {
    return finish(ExternalStatus::ValidationFailure, "returned assignment violates " + eval.violated.front().tag);
  }
  if (!eval.integral) return finish(ExternalStatus::ValidationFailure, "returned assignment is not integral");
  result.assignment = std::move(a);
  return finish(limit_hit ? ExternalStatus::TimeLimit : ExternalStatus::Solved, "");
}

VertexSet extract_vertex_set(const VariableLayout& layout, const Assignment& a, const Rational& tolerance) {
  std::vector<Vertex> members;
  const Rational half(1, 2);
  for (std::size_t i = 0; i < layout.x.size(); ++i) {
    const Rational value = a.value_or_zero(layout.x[i]);
    const Rational to_zero = abs(value);
    const Rational to_one = abs(Rational(value - 1));
    if (to_zero > tolerance && to_one > tolerance) {
      throw std::domain_error("x_" + std::to_string(i) + " is fractional");
    }
    if (value >= half) members.push_back(static_cast<Vertex>(i));
  }
  return VertexSet(std::move(members), static_cast<Vertex>(layout.x.size()));
}

Solution solve_with_backend(const Graph& g, const ProblemSpec& spec, const BackendConfig& cfg) {
  spec.validate(g.num_vertices());
  const Formulation f = build(g, spec);
  const ExternalResult r = solve_external(f.model, cfg);
  Solution sol;
  sol.elapsed = r.elapsed;
  switch (r.status) {
    case ExternalStatus::Infeasible:
      sol.status = SolveStatus::Infeasible;
      return sol;
    case ExternalStatus::TimeLimit:
      sol.status = SolveStatus::TimeLimit;
      break;
    case ExternalStatus::Solved:
      sol.status = SolveStatus::Optimal;
      break;
    default:
      throw BackendError(r.status, r.message);
  }
  if (r.assignment) {
    try {
      sol.vertices = extract_vertex_set(f.layout, *r.assignment, Rational(cfg.integrality_tolerance));
    } catch (const std::domain_error& e) {
      throw BackendError(ExternalStatus::ValidationFailure, e.what());
    }
    sol.objective = objective_of(g, spec, sol.vertices);
  }
  return sol;
}

}  // namespace qclique
