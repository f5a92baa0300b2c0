#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ftoracle/dso.hpp"
#include "ftoracle/generators.hpp"
#include "ftoracle/serialize.hpp"
#include "ftoracle/shortest_paths.hpp"

using namespace fto;

TEST(Serialize, Lengths) {
  EXPECT_EQ(length_to_json(Length::infinity()), "inf");
  EXPECT_EQ(length_to_json(Length(7)), 7);
  EXPECT_EQ(length_from_json(Json("inf")), Length::infinity());
  EXPECT_EQ(length_from_json(Json(3)), Length(3));
  EXPECT_THROW(length_from_json(Json(1.5)), Error);
}

TEST(Serialize, VersionChecks) {
  EXPECT_THROW(oracle_kind(Json::object()), Error);
  EXPECT_THROW(oracle_kind(Json{{"format", "fdo"}, {"version", 99}}), Error);
  EXPECT_THROW(oracle_kind(Json{{"format", "nope"}, {"version", kFormatVersion}}), Error);
  EXPECT_EQ(oracle_kind(Json{{"format", "fdo"}, {"version", kFormatVersion}}), "fdo");
}

TEST(Serialize, HierarchyRoundTrip) {
  const Graph g = cycle_with_chords(30, 3, 1);
  const ApspData a(g);
  const ReferenceDso dso(g, a);
  const auto h = hdph(a, dso, {});
  const Json j = hierarchy_to_json(h);
  EXPECT_EQ(hierarchy_to_json(hierarchy_from_json(j)).dump(), j.dump());
  EXPECT_EQ(j["levels"][0]["pivots"].size(), 30u);
}

TEST(Serialize, FdoRoundTripAnswersMatch) {
  const Graph g = random_strongly_connected(20, 60, 3);
  const auto o = build_fdo_derandomized(g, Rational(1, 2));
  const auto back = fdo_from_json(Json::parse(fdo_to_json(o).dump()));
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) EXPECT_EQ(back.query(e).to_string(), o.query(e).to_string());
  const Json cyc = fdo_to_json(build_fdo_derandomized(fixtures::cycle4(), Rational(1, 2)));
  EXPECT_EQ(cyc["Y"].size(), 4u);
  EXPECT_EQ(cyc["eps"], "1/2");
}

TEST(Serialize, FeoRoundTripAnswersMatch) {
  const Graph g = random_strongly_connected(12, 30, 2);
  const auto o = build_feo(g, build_multi_dso(g, 2), 1.0, 2);
  const auto back = feo_from_json(Json::parse(feo_to_json(o, g).dump()));
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::vector<EdgeId> F{static_cast<EdgeId>(rng.below(g.num_edges())), static_cast<EdgeId>(rng.below(g.num_edges()))};
    const auto s = static_cast<Vertex>(rng.below(12));
    EXPECT_EQ(back.query(s, F), o.query(s, F));
  }
}

TEST(Serialize, DagFeoRoundTripAnswersMatch) {
  const Graph g = random_dag(15, 40, 6, 4);
  const auto o = build_dag_feo(g, 0, 2);
  const Json j = dag_feo_to_json(o);
  const auto back = dag_feo_from_json(Json::parse(j.dump()));
  EXPECT_EQ(dag_feo_to_json(back).dump(), j.dump());
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const std::vector<EdgeId> F{static_cast<EdgeId>(rng.below(g.num_edges())), static_cast<EdgeId>(rng.below(g.num_edges()))};
    EXPECT_EQ(back.query(F), o.query(F));
  }
}

TEST(Serialize, RunReport) {
  RunReport r;
  r.suite = "demo";
  r.check("a", true);
  EXPECT_TRUE(r.passed());
  r.check("b", false);
  const Json j = r.to_json();
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 2u);
  EXPECT_TRUE(j.contains("wall_time_ms"));
}
