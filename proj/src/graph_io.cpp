#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qclique/graph.hpp"

namespace qclique {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string token;
  while (ss >> token) tokens.push_back(token);
  return tokens;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool parse_int(const std::string& token, long long& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

Graph build(long long n, std::vector<std::pair<Vertex, Vertex>> pairs) {
  return Graph::from_edges(static_cast<Vertex>(n), std::move(pairs));
}

}  // namespace

Graph parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty input, missing MatrixMarket header");
  ++line_no;
  auto banner = split_ws(line);
  if (banner.empty() || lower(banner[0]) != "%%matrixmarket") {
    throw ParseError(line_no, "missing %%MatrixMarket header");
  }
  if (banner.size() < 5 || lower(banner[1]) != "matrix") {
    throw ParseError(line_no, "malformed MatrixMarket header");
  }
  if (lower(banner[2]) != "coordinate") {
    throw ParseError(line_no, "unsupported MatrixMarket format '" + banner[2] + "' (need coordinate)");
  }
  const std::string field = lower(banner[3]);
  if (field != "pattern" && field != "real" && field != "integer") {
    throw ParseError(line_no, "unsupported MatrixMarket field '" + banner[3] + "'");
  }
  const std::size_t entry_tokens = field == "pattern" ? 2 : 3;

  long long rows = -1;
  long long cols = -1;
  long long nnz = -1;
  long long seen = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '%') continue;
    if (rows < 0) {
      if (tokens.size() != 3 || !parse_int(tokens[0], rows) || !parse_int(tokens[1], cols) ||
          !parse_int(tokens[2], nnz) || rows < 0 || cols < 0 || nnz < 0) {
        throw ParseError(line_no, "malformed size line");
      }
      pairs.reserve(static_cast<std::size_t>(nnz));
      continue;
    }
    long long i = 0;
    long long j = 0;
    if (tokens.size() != entry_tokens || !parse_int(tokens[0], i) || !parse_int(tokens[1], j)) {
      throw ParseError(line_no, "malformed entry");
    }
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError(line_no, "index out of range: " + tokens[0] + " " + tokens[1]);
    }
    if (++seen > nnz) throw ParseError(line_no, "more entries than declared");
    pairs.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
  }
  if (rows < 0) throw ParseError(line_no, "missing size line");
  if (seen < nnz) {
    throw ParseError(line_no, "expected " + std::to_string(nnz) + " entries, found " + std::to_string(seen));
  }
  return build(std::max(rows, cols), std::move(pairs));
}

Graph parse_edge_list(std::istream& in, int base) {
  if (base != 0 && base != 1) throw std::invalid_argument("edge list base must be 0 or 1");
  std::string line;
  std::size_t line_no = 0;
  long long declared_n = -1;
  long long max_id = -1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    if (head[0] == '#' || head[0] == '%' || head == "c") continue;
    if (head == "p") {
      long long n = 0;
      if (tokens.size() < 3 || !parse_int(tokens[tokens.size() - 2], n) || n < 0) {
        throw ParseError(line_no, "malformed problem line");
      }
      declared_n = n;
      continue;
    }
    std::size_t first = head == "e" ? 1 : 0;
    if (tokens.size() - first != 2) {
      throw ParseError(line_no, "expected two vertex ids, found " + std::to_string(tokens.size() - first));
    }
    long long a = 0;
    long long b = 0;
    if (!parse_int(tokens[first], a) || !parse_int(tokens[first + 1], b)) {
      throw ParseError(line_no, "non-integer vertex id");
    }
    a -= base;
    b -= base;
    if (a < 0 || b < 0) throw ParseError(line_no, "negative vertex id");
    if (declared_n >= 0 && (a >= declared_n || b >= declared_n)) {
      throw ParseError(line_no, "vertex id exceeds declared vertex count");
    }
    if (std::max(a, b) >= (1LL << 30)) throw ParseError(line_no, "vertex id too large");
    max_id = std::max({max_id, a, b});
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (pairs.empty()) throw ParseError(0, "no edges");
  return build(std::max(declared_n, max_id + 1), std::move(pairs));
}

Graph parse_graph(std::istream& in, int base) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream ss(text);
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && lower(text.substr(start, 14)) == "%%matrixmarket") {
    return parse_matrix_market(ss);
  }
  return parse_edge_list(ss, base);
}

Graph load_graph(const std::string& path, int base) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_graph(in, base);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace qclique
