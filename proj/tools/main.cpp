#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ftoracle/dag_feo.hpp"
#include "ftoracle/dso.hpp"
#include "ftoracle/fdo.hpp"
#include "ftoracle/feo.hpp"
#include "ftoracle/generators.hpp"
#include "ftoracle/hdph.hpp"
#include "ftoracle/lowerbound.hpp"
#include "ftoracle/serialize.hpp"
#include "ftoracle/shortest_paths.hpp"
#include "suites.hpp"

using namespace fto;

namespace {

// Exit codes: 0 ok, 1 verification failed, 2 bad input or runtime error.
constexpr int kFailed = 1;
constexpr int kError = 2;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void write_doc(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

BitMatrix load_matrix(const std::string& spec, std::size_t N, bool admissible) {
  if (spec.rfind("random:", 0) == 0) {
    const auto seed = std::stoull(spec.substr(7));
    return admissible ? random_admissible_matrix(N, seed) : random_nonnull_matrix(N, seed);
  }
  std::ifstream in(spec);
  if (!in) throw Error("cannot read matrix " + spec);
  return parse_matrix(in);
}

std::string matrix_text(const BitMatrix& X) {
  std::ostringstream out;
  write_matrix(out, X);
  return out.str();
}

// "3" is an edge id; "1:2" or "1->2" names the edge by its endpoints.
EdgeId parse_edge(const Graph& g, const std::string& text) {
  auto sep = text.find("->");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find(':');
    skip = 1;
  }
  if (sep == std::string::npos) {
    const auto id = std::stol(text);
    if (id < 0 || static_cast<std::size_t>(id) >= g.num_edges()) throw Error("edge id out of range: " + text);
    return static_cast<EdgeId>(id);
  }
  const auto u = static_cast<Vertex>(std::stol(text.substr(0, sep)));
  const auto v = static_cast<Vertex>(std::stol(text.substr(sep + skip)));
  const auto e = g.find_edge(u, v);
  if (!e) throw Error("no edge " + text);
  return *e;
}

std::vector<EdgeId> parse_edges(const Graph& g, const std::vector<std::string>& items) {
  std::vector<EdgeId> out;
  for (const auto& item : items) out.push_back(parse_edge(g, item));
  return out;
}

// Oracle files carry their graph only for feo; fdo and dag-feo queries by
// endpoint need --graph.
Graph graph_for_query(const Json& doc, const std::string& graph_path) {
  if (!graph_path.empty()) return load_graph(graph_path);
  if (doc.contains("graph")) return graph_from_json(doc["graph"]);
  return Graph(0, {});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault-tolerant diameter and eccentricity oracles"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph or lower-bound instance");
  std::string family = "random";
  std::size_t gen_n = 30, gen_m = 0, gen_f = 1, blocks = 1;
  std::int64_t gen_D = 3, gen_w = 1;
  std::uint64_t gen_seed = 0;
  std::string matrix, gen_out;
  gen->add_option("--family", family, "random | random-dag | fdo-lb | conn-lb")
      ->check(CLI::IsMember({"random", "random-dag", "fdo-lb", "conn-lb"}));
  gen->add_option("--n", gen_n);
  gen->add_option("--m", gen_m, "edges (random, random-dag) or sqrt(m) squared (fdo-lb)");
  gen->add_option("--D", gen_D, "target diameter (fdo-lb)");
  gen->add_option("--f", gen_f, "tree height (conn-lb)");
  gen->add_option("--blocks", blocks, "number of blocks (conn-lb)");
  gen->add_option("--max-weight", gen_w);
  gen->add_option("--matrix", matrix, "matrix file or random:SEED (fdo-lb, conn-lb)");
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--out", gen_out, "output graph file; the matrix goes to OUT.matrix");

  // build
  auto* build = app.add_subcommand("build", "Build an oracle and write it as JSON");
  std::string kind, graph_path, build_out, eps_text = "1/2", pivots = "hdph";
  std::size_t build_f = 1;
  Vertex source = 0;
  bool vertex_failures = false;
  double c = 3;
  build->add_option("--oracle", kind, "fdo | feo | dag-feo | hdph")
      ->required()
      ->check(CLI::IsMember({"fdo", "feo", "dag-feo", "hdph"}));
  build->add_option("--graph", graph_path)->required();
  build->add_option("-o,--out", build_out);
  build->add_option("--eps", eps_text, "stretch as p/q (fdo)");
  build->add_option("--pivots", pivots, "hdph | all | sample:SEED (fdo)");
  build->add_option("--c", c, "sampling constant (fdo with sample pivots)");
  build->add_flag("--vertex", vertex_failures, "vertex failures (fdo, hdph)");
  build->add_option("--f", build_f, "number of failures (feo, dag-feo)");
  build->add_option("--source", source, "source vertex (dag-feo)");

  // query
  auto* query = app.add_subcommand("query", "Answer one query from an oracle file");
  std::string query_kind, oracle_path, query_graph, edge_text;
  std::vector<std::string> fails;
  std::int64_t vertex = -1;
  Vertex query_source = 0;
  query->add_option("--oracle", query_kind, "expected oracle kind");
  query->add_option("--file", oracle_path, "oracle JSON")->required();
  query->add_option("--graph", query_graph, "graph file, needed to name edges by endpoints");
  query->add_option("--edge", edge_text, "failed edge (fdo): id or tail:head");
  query->add_option("--vertex", vertex, "failed vertex (fdo)");
  query->add_option("--fail", fails, "failed edges (feo, dag-feo)")->delimiter(',');
  query->add_option("--source", query_source, "source (feo)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite; nonzero exit on any violation");
  std::string suite;
  ftocli::SuiteOptions so;
  std::string suite_eps = "1/2", suite_r1 = "1", report_path;
  verify->add_option("--suite", suite, "hdph | fdo | feo | dag-feo | lb | ssrp | dso")
      ->required()
      ->check(CLI::IsMember({"hdph", "fdo", "feo", "dag-feo", "lb", "ssrp", "dso"}));
  verify->add_option("--n", so.n);
  verify->add_option("--m", so.m);
  verify->add_option("--graphs", so.graphs);
  verify->add_option("--seed", so.seed);
  verify->add_option("--eps", suite_eps);
  verify->add_option("--f", so.f);
  verify->add_option("--C", so.C);
  verify->add_option("--max-weight", so.max_weight);
  verify->add_option("--r1", suite_r1);
  verify->add_option("--pivots", so.pivots, "hdph | sample (fdo)");
  verify->add_option("--c", so.c);
  verify->add_option("--window", so.window, "tight | verbatim (hdph)");
  verify->add_option("--samples", so.samples, "sampled failure sets per graph (feo, dag-feo)");
  verify->add_option("--report", report_path, "write the JSON report here instead of stdout");

  // bench
  auto* bench = app.add_subcommand("bench", "Time builds and queries, print pivot-size tables");
  ftocli::BenchOptions bo;
  std::string bench_eps = "1/2", bench_out;
  bench->add_option("--n", bo.n);
  bench->add_option("--m", bo.m);
  bench->add_option("--seed", bo.seed);
  bench->add_option("--reps", bo.reps);
  bench->add_option("--eps", bench_eps);
  bench->add_option("--report", bench_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (family == "random") {
        write_text(gen_out, graph_to_string(random_strongly_connected(gen_n, gen_m ? gen_m : 3 * gen_n, gen_seed, gen_w)));
      } else if (family == "random-dag") {
        write_text(gen_out, graph_to_string(random_dag(gen_n, gen_m ? gen_m : 3 * gen_n, gen_seed, gen_w)));
      } else if (family == "fdo-lb") {
        const std::size_t m = gen_m ? gen_m : 16;
        const auto N = static_cast<std::size_t>(std::sqrt(static_cast<double>(m)));
        const BitMatrix X = load_matrix(matrix.empty() ? "random:" + std::to_string(gen_seed) : matrix, N, true);
        const auto inst = gen_fdo_lb(gen_n, m, gen_D, X);
        write_text(gen_out, graph_to_string(inst.graph));
        if (!gen_out.empty() && gen_out != "-") write_text(gen_out + ".matrix", matrix_text(inst.X));
      } else {
        const std::size_t N = std::size_t{1} << gen_f;
        std::vector<BitMatrix> Xs;
        for (std::size_t b = 0; b < blocks; ++b) {
          Xs.push_back(matrix.empty() ? random_nonnull_matrix(N, gen_seed + b) : load_matrix(matrix, N, false));
        }
        const std::size_t n = gen->count("--n") ? gen_n : blocks * (4 * N - 2);
        const auto inst = gen_conn_lb(n, gen_f, Xs);
        write_text(gen_out, graph_to_string(inst.graph));
        if (!gen_out.empty() && gen_out != "-") {
          std::string text;
          for (const auto& X : Xs) text += matrix_text(X) + "\n";
          write_text(gen_out + ".matrix", text);
        }
      }
      return 0;
    }

    if (*build) {
      const Graph g = load_graph(graph_path);
      const Rational eps = Rational::parse(eps_text);
      const auto failure_kind = vertex_failures ? Failure::Kind::kVertex : Failure::Kind::kEdge;
      if (kind == "fdo") {
        FdoBuildInfo info;
        std::optional<FdoOracle> o;
        if (pivots == "hdph") {
          o.emplace(build_fdo_derandomized(g, eps, failure_kind, &info));
        } else if (pivots.rfind("sample:", 0) == 0) {
          o.emplace(build_fdo_sampled(g, eps, c, std::stoull(pivots.substr(7)), failure_kind, &info));
        } else if (pivots == "all") {
          std::vector<Vertex> all(g.num_vertices());
          for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
          const ApspData a(g);
          const ReferenceDso dso(g, a);
          o.emplace(build_fdo(g, eps, all, dso, failure_kind));
        } else {
          throw Error("unknown pivot source: " + pivots);
        }
        if (!info.note.empty()) std::cerr << "note: " << info.note << '\n';
        write_doc(build_out, fdo_to_json(*o));
      } else if (kind == "feo") {
        write_doc(build_out, feo_to_json(build_feo(g, build_multi_dso(g, build_f), 1.0, build_f), g));
      } else if (kind == "dag-feo") {
        write_doc(build_out, dag_feo_to_json(build_dag_feo(g, source, build_f)));
      } else {
        const ApspData a(g);
        const ReferenceDso dso(g, a);
        HdphOptions options;
        options.include_vertex_failures = vertex_failures;
        write_doc(build_out, hierarchy_to_json(hdph(a, dso, options)));
      }
      return 0;
    }

    if (*query) {
      const Json doc = read_json_file(oracle_path);
      const std::string found = oracle_kind(doc);
      if (!query_kind.empty() && query_kind != found) {
        throw Error("oracle file holds " + found + ", not " + query_kind);
      }
      const Graph g = graph_for_query(doc, query_graph);
      if (found == "fdo") {
        const FdoOracle o = fdo_from_json(doc);
        if (vertex >= 0) {
          std::cout << o.query(static_cast<std::int32_t>(vertex)).to_string() << '\n';
        } else if (!edge_text.empty()) {
          // Without a graph only plain ids can be resolved.
          const EdgeId e = g.num_vertices() ? parse_edge(g, edge_text) : static_cast<EdgeId>(std::stol(edge_text));
          std::cout << o.query(e).to_string() << '\n';
        } else {
          throw Error("fdo query needs --edge or --vertex");
        }
      } else if (found == "feo") {
        const FeoOracle o = feo_from_json(doc);
        std::cout << o.query(query_source, parse_edges(g, fails)).to_string() << '\n';
      } else if (found == "dag-feo") {
        const DagFeoOracle o = dag_feo_from_json(doc);
        std::vector<EdgeId> F;
        if (g.num_vertices()) {
          F = parse_edges(g, fails);
        } else {
          for (const auto& item : fails) F.push_back(static_cast<EdgeId>(std::stol(item)));
        }
        std::cout << o.query(F).to_string() << '\n';
      } else {
        throw Error("no queries for oracle kind " + found);
      }
      return 0;
    }

    if (*verify) {
      so.eps = Rational::parse(suite_eps);
      so.r1 = Rational::parse(suite_r1);
      const RunReport r = ftocli::run_suite(suite, so);
      write_doc(report_path, r.to_json());
      std::cerr << suite << ": " << (r.passed() ? "ok" : "FAILED") << '\n';
      return r.passed() ? 0 : kFailed;
    }

    if (*bench) {
      bo.eps = Rational::parse(bench_eps);
      write_doc(bench_out, ftocli::run_bench(bo).to_json());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return 0;
}
