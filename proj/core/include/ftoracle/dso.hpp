#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "ftoracle/graph.hpp"
#include "ftoracle/length.hpp"
#include "ftoracle/shortest_paths.hpp"

namespace fto {

class DistanceSensitivityOracle;

/// Distance answer with a path that is only built when asked for.
class DsoQueryResult {
 public:
  DsoQueryResult(Length distance, const DistanceSensitivityOracle* oracle, Vertex s, Vertex t, Failure f)
      : distance_(distance), oracle_(oracle), s_(s), t_(t), f_(f) {}

  Length distance() const { return distance_; }
  /// nullopt when the distance is infinite.
  std::optional<Path> path() const;

 private:
  Length distance_;
  const DistanceSensitivityOracle* oracle_;
  Vertex s_;
  Vertex t_;
  Failure f_;
};

/// Path-reporting oracle for d(s,t,f) with a single failed edge or vertex.
class DistanceSensitivityOracle {
 public:
  virtual ~DistanceSensitivityOracle() = default;

  virtual Length distance(Vertex s, Vertex t, const Failure& f) const = 0;
  virtual std::optional<Path> path(Vertex s, Vertex t, const Failure& f) const = 0;

  DsoQueryResult query(Vertex s, Vertex t, const Failure& f) const {
    return DsoQueryResult(distance(s, t, f), this, s, t, f);
  }
};

/// Exact oracle. Off-path failures are answered from the APSP data; the rest
/// from a lazily filled, mutex-protected cache of single-source trees in G-f.
class ReferenceDso final : public DistanceSensitivityOracle {
 public:
  /// g and apsp must outlive the oracle.
  ReferenceDso(const Graph& g, const ApspData& apsp) : g_(g), apsp_(apsp) {}

  Length distance(Vertex s, Vertex t, const Failure& f) const override;
  std::optional<Path> path(Vertex s, Vertex t, const Failure& f) const override;

  std::size_t cached_trees() const;

 private:
  bool affects(Vertex s, Vertex t, const Failure& f) const;
  const ShortestPathTree& tree(Vertex s, const Failure& f) const;

  const Graph& g_;
  const ApspData& apsp_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<Vertex, int, std::int32_t>, std::unique_ptr<ShortestPathTree>> cache_;
};

/// d(s,t) <= r for a rational radius r.
bool within(Length d, const Rational& r);

/// An r-truncated DSO for single edge failures: exact whenever d(s,t,e) <= r,
/// infinity otherwise.
class TruncatedDso {
 public:
  virtual ~TruncatedDso() = default;

  virtual Rational radius() const = 0;
  virtual Length distance(Vertex s, Vertex t, EdgeId e) const = 0;
  virtual std::optional<Path> path(Vertex s, Vertex t, EdgeId e) const = 0;
};

/// Brute-force core: bounded Dijkstra from s in G-e, cached per (s,e).
class TruncatedCore final : public TruncatedDso {
 public:
  TruncatedCore(const Graph& g, const ApspData& apsp, Rational r);

  Rational radius() const override { return r_; }
  Length distance(Vertex s, Vertex t, EdgeId e) const override;
  std::optional<Path> path(Vertex s, Vertex t, EdgeId e) const override;

 private:
  const ShortestPathTree& tree(Vertex s, EdgeId e) const;

  const Graph& g_;
  const ApspData& apsp_;
  Rational r_;
  Length bound_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Vertex, EdgeId>, std::unique_ptr<ShortestPathTree>> cache_;
};

/// Grows an r-truncated DSO to radius (3/2)r using a pivot set B that hits a
/// replacement path for every d(s,t,e) in [r/2 - 2M, r]. Answers are memoized
/// per (s,t,e) so a chain of extensions stays polynomial.
class ExtendedDso final : public TruncatedDso {
 public:
  ExtendedDso(std::shared_ptr<const TruncatedDso> inner, std::vector<Vertex> pivots);

  Rational radius() const override { return r_; }
  Length distance(Vertex s, Vertex t, EdgeId e) const override { return answer(s, t, e).first; }
  std::optional<Path> path(Vertex s, Vertex t, EdgeId e) const override;

  const std::vector<Vertex>& pivots() const { return pivots_; }

 private:
  /// (distance, pivot used or kNoVertex when the inner oracle answered).
  std::pair<Length, Vertex> answer(Vertex s, Vertex t, EdgeId e) const;

  std::shared_ptr<const TruncatedDso> inner_;
  std::vector<Vertex> pivots_;
  Rational r_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<Vertex, Vertex, EdgeId>, std::pair<Length, Vertex>> memo_;
};

std::shared_ptr<const TruncatedDso> build_truncated_core(const Graph& g, const ApspData& apsp, const Rational& r);

std::shared_ptr<const TruncatedDso> extend_dso(std::shared_ptr<const TruncatedDso> dso, std::vector<Vertex> pivots);

struct ExtendStats {
  std::size_t num_paths = 0;
  std::size_t min_path_vertices = 0;
};

/// Pivot set B_i for radius r_i from B_{i-2} (prev) and an r_i-truncated DSO.
/// Collects P(x,y) for x,y in prev with r_i/18 <= d(x,y) <= r_i, and for every
/// edge e on such a P(x,y) with d(x,y) <= r_i the reported replacement path
/// when r_i/18 <= d(x,y,e) <= r_i; then hits them greedily with
/// L = ceil(r_i/(18 M)).
std::vector<Vertex> extend_pivots(const Graph& g, const ApspData& apsp, const std::vector<Vertex>& prev,
                                  const TruncatedDso& dso, const Rational& r_i, Weight M,
                                  ExtendStats* stats = nullptr);

struct DsoLevel {
  Rational radius;
  std::size_t num_pivots = 0;
  std::size_t num_paths = 0;
};

/// Core at r1, then alternating extend_pivots / extend_dso until the radius
/// reaches n*M. The result is exact for every (s,t,e).
class FullDso final : public DistanceSensitivityOracle {
 public:
  /// The core radius is max(r1, 4M).
  FullDso(const Graph& g, const Rational& r1);
  FullDso(const FullDso&) = delete;
  FullDso& operator=(const FullDso&) = delete;

  Length distance(Vertex s, Vertex t, const Failure& f) const override;
  std::optional<Path> path(Vertex s, Vertex t, const Failure& f) const override;

  const std::vector<DsoLevel>& levels() const { return levels_; }
  /// Pivot sets B_1, B_2, ... in build order.
  const std::vector<std::vector<Vertex>>& pivot_sets() const { return pivot_sets_; }
  const TruncatedDso& top() const { return *top_; }

 private:
  EdgeId edge_of(const Failure& f) const;

  const Graph& g_;
  ApspData apsp_;
  std::shared_ptr<const TruncatedDso> top_;
  std::vector<DsoLevel> levels_;
  std::vector<std::vector<Vertex>> pivot_sets_;
};

std::unique_ptr<FullDso> build_full_dso(const Graph& g, const Rational& r1);

}  // namespace fto
