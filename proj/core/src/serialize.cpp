#include "ftoracle/serialize.hpp"

#include <algorithm>
#include <fstream>

namespace fto {

namespace {

Json header(const char* format) {
  Json j;
  j["format"] = format;
  j["version"] = kFormatVersion;
  return j;
}

void expect(const Json& j, const char* format) {
  const std::string kind = oracle_kind(j);
  if (kind != format) throw Error("expected a " + std::string(format) + " document, got " + kind);
}

const char* window_name(PathWindow w) { return w == PathWindow::kTight ? "tight" : "verbatim"; }

PathWindow window_from(const std::string& s) {
  if (s == "tight") return PathWindow::kTight;
  if (s == "verbatim") return PathWindow::kVerbatim;
  throw Error("unknown path window '" + s + "'");
}

const char* kind_name(Failure::Kind k) { return k == Failure::Kind::kVertex ? "vertex" : "edge"; }

Failure::Kind kind_from(const std::string& s) {
  if (s == "vertex") return Failure::Kind::kVertex;
  if (s == "edge") return Failure::Kind::kEdge;
  throw Error("unknown failure kind '" + s + "'");
}

}  // namespace

Json length_to_json(Length l) {
  if (l.is_infinite()) return "inf";
  return l.value();
}

Length length_from_json(const Json& j) {
  if (j.is_string()) return Length::parse(j.get<std::string>());
  if (j.is_number_integer()) return Length(j.get<std::int64_t>());
  throw Error("length must be an integer or \"inf\"");
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head, e.weight});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>(), e.at(2).get<Weight>()});
  return Graph(j.at("n").get<std::size_t>(), std::move(edges));
}

Json hierarchy_to_json(const PivotHierarchy& h) {
  Json j = header("hierarchy");
  j["C"] = h.C;
  j["n"] = h.n;
  j["vertex_failures"] = h.vertex_failures;
  j["window"] = window_name(h.window);
  Json levels = Json::array();
  for (const auto& l : h.levels) {
    levels.push_back({{"i", l.i},
                      {"r_lo", l.r_lo},
                      {"r_hi", l.r_hi},
                      {"L", l.L},
                      {"num_paths", l.num_paths},
                      {"pivots", l.pivots}});
  }
  j["levels"] = std::move(levels);
  return j;
}

PivotHierarchy hierarchy_from_json(const Json& j) {
  expect(j, "hierarchy");
  PivotHierarchy h;
  h.C = j.at("C").get<double>();
  h.n = j.at("n").get<std::size_t>();
  h.vertex_failures = j.at("vertex_failures").get<bool>();
  h.window = window_from(j.at("window").get<std::string>());
  for (const auto& l : j.at("levels")) {
    PivotLevel level;
    level.i = l.at("i").get<int>();
    level.r_lo = l.at("r_lo").get<double>();
    level.r_hi = l.at("r_hi").get<double>();
    level.L = l.at("L").get<std::size_t>();
    level.num_paths = l.at("num_paths").get<std::size_t>();
    level.pivots = l.at("pivots").get<std::vector<Vertex>>();
    h.levels.push_back(std::move(level));
  }
  return h;
}

Json fdo_to_json(const FdoOracle& o) {
  Json j = header("fdo");
  const char* key = kind_name(o.kind());
  j["kind"] = key;
  j["n"] = o.num_vertices();
  j["num_ids"] = o.num_ids();
  j["diam0"] = length_to_json(o.diam0());
  j["eps"] = o.eps().to_string();
  j["pivots"] = o.pivots();
  Json X = Json::array();
  for (std::int32_t id : o.x_ids()) X.push_back({{key, id}, {"phi", length_to_json(*o.phi(id))}});
  j["X"] = std::move(X);
  j["Y"] = o.y_ids();
  return j;
}

FdoOracle fdo_from_json(const Json& j) {
  expect(j, "fdo");
  const auto kind = kind_from(j.at("kind").get<std::string>());
  const char* key = kind_name(kind);
  FdoOracle o(kind, j.at("n").get<std::size_t>(), j.at("num_ids").get<std::size_t>(), length_from_json(j.at("diam0")),
              Rational::parse(j.at("eps").get<std::string>()), j.at("pivots").get<std::vector<Vertex>>());
  for (const auto& x : j.at("X")) o.set_phi(x.at(key).get<std::int32_t>(), length_from_json(x.at("phi")));
  for (const auto& y : j.at("Y")) o.set_disconnecting(y.get<std::int32_t>());
  return o;
}

Json feo_to_json(const FeoOracle& o, const Graph& g) {
  Json j = header("feo");
  j["f"] = o.f();
  j["sigma"] = o.sigma();
  Json ecc = Json::array();
  for (Length l : o.ecc0()) ecc.push_back(length_to_json(l));
  j["ecc0"] = std::move(ecc);
  j["graph"] = graph_to_json(g);
  return j;
}

FeoOracle feo_from_json(const Json& j) {
  expect(j, "feo");
  Graph g = graph_from_json(j.at("graph"));
  const auto f = j.at("f").get<std::size_t>();
  std::vector<Length> ecc0;
  for (const auto& l : j.at("ecc0")) ecc0.push_back(length_from_json(l));
  if (ecc0.size() != g.num_vertices()) throw Error("feo: ecc0 has the wrong length");
  std::vector<Vertex> heads;
  for (const Edge& e : g.edges()) heads.push_back(e.head);
  return FeoOracle(std::move(ecc0), std::move(heads), build_multi_dso(std::move(g), f), j.at("sigma").get<double>(), f);
}

Json dag_feo_to_json(const DagFeoOracle& o) {
  Json j = header("dag-feo");
  j["source"] = o.source();
  j["f"] = o.f();
  j["num_edges"] = o.num_edges();
  j["parent_edges"] = o.parent_edges();
  Json dist = Json::array();
  for (Length l : o.dist0()) dist.push_back(length_to_json(l));
  j["dist0"] = std::move(dist);
  Json lists = Json::array();
  for (std::size_t v = 0; v < o.dist0().size(); ++v) {
    Json list = Json::array();
    for (const auto& entry : o.in_list(static_cast<Vertex>(v))) list.push_back({entry.edge, entry.wt_star});
    lists.push_back(std::move(list));
  }
  j["in_lists"] = std::move(lists);
  return j;
}

DagFeoOracle dag_feo_from_json(const Json& j) {
  expect(j, "dag-feo");
  std::vector<Length> dist;
  for (const auto& l : j.at("dist0")) dist.push_back(length_from_json(l));
  std::vector<std::vector<DagFeoOracle::Entry>> lists;
  for (const auto& list : j.at("in_lists")) {
    auto& out = lists.emplace_back();
    for (const auto& e : list) out.push_back({e.at(0).get<EdgeId>(), e.at(1).get<Weight>()});
  }
  auto parents = j.at("parent_edges").get<std::vector<EdgeId>>();
  if (parents.size() != dist.size() || lists.size() != dist.size()) throw Error("dag-feo: inconsistent vertex counts");
  return DagFeoOracle(j.at("source").get<Vertex>(), j.at("f").get<std::size_t>(), j.at("num_edges").get<std::size_t>(),
                      std::move(parents), std::move(dist), std::move(lists));
}

Json pivot_sets_to_json(const std::vector<std::vector<Vertex>>& sets) { return sets; }

std::string oracle_kind(const Json& j) {
  if (!j.is_object() || !j.contains("format") || !j.contains("version")) {
    throw Error("not an oracle document: missing format or version");
  }
  const auto version = j.at("version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    throw Error("unknown oracle version " + version.dump());
  }
  auto kind = j.at("format").get<std::string>();
  if (kind != "hierarchy" && kind != "fdo" && kind != "feo" && kind != "dag-feo") {
    throw Error("unknown oracle format '" + kind + "'");
  }
  return kind;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

Json RunReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["parameters"] = parameters;
  Json cs = Json::array();
  for (const auto& [name, pass] : checks) cs.push_back({{"name", name}, {"pass", pass}});
  j["checks"] = std::move(cs);
  j["counters"] = counters;
  j["passed"] = passed();
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

}  // namespace fto
