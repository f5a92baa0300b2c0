#include "ftoracle/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace fto {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : edges_(std::move(edges)), out_(num_vertices), in_(num_vertices) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  const auto n = static_cast<Vertex>(num_vertices);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    const std::string where = "edge " + std::to_string(id);
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw Error(where + ": vertex id out of range");
    }
    if (e.weight < 1) throw Error(where + ": weight below 1");
    if (e.tail == e.head) throw Error(where + ": self-loop");
    const auto key = static_cast<std::uint64_t>(e.tail) * num_vertices + static_cast<std::uint64_t>(e.head);
    if (!seen.insert(key).second) throw Error(where + ": duplicate edge");
    out_[static_cast<std::size_t>(e.tail)].push_back(static_cast<EdgeId>(id));
    in_[static_cast<std::size_t>(e.head)].push_back(static_cast<EdgeId>(id));
    max_weight_ = std::max(max_weight_, e.weight);
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex tail, Vertex head) const {
  for (EdgeId e : out_edges(tail)) {
    if (edge(e).head == head) return e;
  }
  return std::nullopt;
}

std::vector<EdgeId> Graph::incident_edges(Vertex v) const {
  std::vector<EdgeId> result(out_edges(v).begin(), out_edges(v).end());
  result.insert(result.end(), in_edges(v).begin(), in_edges(v).end());
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<EdgeId> Failure::banned_edges(const Graph& g) const {
  if (is_edge()) return {id};
  return g.incident_edges(id);
}

std::string Failure::to_string() const {
  return (is_edge() ? "e" : "v") + std::to_string(id);
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t to_int(std::string_view token, std::size_t line_no, const char* what) {
  std::int64_t v = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'n m directed'");
      n = to_int(tokens[0], line_no, "vertex count");
      m = to_int(tokens[1], line_no, "edge count");
      if (tokens[2] != "directed") throw ParseError(line_no, "expected 'directed' in header");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      have_header = true;
      continue;
    }

    if (tokens.size() != 3) throw ParseError(line_no, "edge line must be 'u v w'");
    if (static_cast<std::int64_t>(edges.size()) >= m) throw ParseError(line_no, "more edges than declared");
    const std::int64_t u = to_int(tokens[0], line_no, "vertex id");
    const std::int64_t v = to_int(tokens[1], line_no, "vertex id");
    const std::int64_t w = to_int(tokens[2], line_no, "weight");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
    if (w < 1) throw ParseError(line_no, "weight below 1");
    if (u == v) throw ParseError(line_no, "self-loop");
    const auto key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }

  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << " directed\n";
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << ' ' << e.weight << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace fto
