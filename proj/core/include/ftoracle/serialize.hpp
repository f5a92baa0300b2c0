#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftoracle/dag_feo.hpp"
#include "ftoracle/fdo.hpp"
#include "ftoracle/feo.hpp"
#include "ftoracle/hdph.hpp"

namespace fto {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Integers for finite lengths, "inf" otherwise.
Json length_to_json(Length l);
Length length_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json hierarchy_to_json(const PivotHierarchy& h);
PivotHierarchy hierarchy_from_json(const Json& j);

Json fdo_to_json(const FdoOracle& o);
FdoOracle fdo_from_json(const Json& j);

/// Embeds the graph; loading rebuilds the exact multi-failure DSO from it.
Json feo_to_json(const FeoOracle& o, const Graph& g);
FeoOracle feo_from_json(const Json& j);

Json dag_feo_to_json(const DagFeoOracle& o);
DagFeoOracle dag_feo_from_json(const Json& j);

/// Plain list of vertex sets, for comparing pipelines run to run.
Json pivot_sets_to_json(const std::vector<std::vector<Vertex>>& sets);

/// "hierarchy", "fdo", "feo" or "dag-feo". Throws on a missing or unknown
/// format or version.
std::string oracle_kind(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Summary of a verification or benchmark run.
struct RunReport {
  std::string suite;
  Json parameters = Json::object();
  std::vector<std::pair<std::string, bool>> checks;
  Json counters = Json::object();
  double wall_time_ms = 0;

  void check(const std::string& name, bool pass) { checks.emplace_back(name, pass); }
  bool passed() const;
  Json to_json() const;
};

}  // namespace fto
