#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftoracle/dso.hpp"
#include "ftoracle/graph.hpp"
#include "ftoracle/hdph.hpp"
#include "ftoracle/length.hpp"

namespace fto {

/// Single-failure diameter oracle with stretch 1 + eps.
///
/// Failures that disconnect the graph answer infinity, failures that raise
/// some pivot-to-pivot distance answer phi + eps*diam0, everything else
/// (1 + eps)*diam0. Lookups are array-indexed.
class FdoOracle {
 public:
  FdoOracle() = default;
  FdoOracle(Failure::Kind kind, std::size_t n, std::size_t num_ids, Length diam0, Rational eps,
            std::vector<Vertex> pivots);

  Failure::Kind kind() const { return kind_; }
  std::size_t num_vertices() const { return n_; }
  Length diam0() const { return diam0_; }
  const Rational& eps() const { return eps_; }
  const std::vector<Vertex>& pivots() const { return pivots_; }

  /// Failed edge id (edge oracle) or failed vertex id (vertex oracle).
  ScaledLength query(std::int32_t id) const;

  void set_phi(std::int32_t id, Length phi);
  void set_disconnecting(std::int32_t id);

  std::optional<Length> phi(std::int32_t id) const { return phi_.at(static_cast<std::size_t>(id)); }
  bool disconnecting(std::int32_t id) const { return bridge_.at(static_cast<std::size_t>(id)) != 0; }

  /// Sorted ids of X and Y.
  std::vector<std::int32_t> x_ids() const;
  std::vector<std::int32_t> y_ids() const;
  std::size_t num_ids() const { return phi_.size(); }

 private:
  Failure::Kind kind_ = Failure::Kind::kEdge;
  std::size_t n_ = 0;
  Length diam0_;
  Rational eps_;
  std::vector<Vertex> pivots_;
  std::vector<std::optional<Length>> phi_;
  std::vector<char> bridge_;
};

/// Includes each vertex independently with probability c ln(n) / L.
/// Throws if L < c ln(n).
std::vector<Vertex> sample_pivots(std::size_t n, double L, double c, std::uint64_t seed);

/// Level i* of h: the largest i with C^i < eps*D/2, lowered by one when
/// i* >= 3 and C^i* + 1 > eps*D/2 so that a pivot lies within eps*D/2 of the
/// ends of every long path. Levels <= 2 are V. Throws if eps*D/2 <= 1.
int derandomized_level(const PivotHierarchy& h, Length diameter, const Rational& eps);
int derandomized_level(double C, int top, Length diameter, const Rational& eps);
std::vector<Vertex> derandomized_pivots(const PivotHierarchy& h, Length diameter, const Rational& eps);

/// Requires g strongly connected and eps > 0.
FdoOracle build_fdo(const Graph& g, const Rational& eps, std::vector<Vertex> pivots,
                    const DistanceSensitivityOracle& dso, Failure::Kind kind = Failure::Kind::kEdge);

struct FdoBuildInfo {
  std::string pivot_source;  // "hdph", "sample", or "all"
  std::optional<int> level;
  std::string note;
};

/// Pivots from a tight-window HDPH hierarchy with C = 2, falling back to B = V when the
/// diameter is too small for any level.
FdoOracle build_fdo_derandomized(const Graph& g, const Rational& eps, Failure::Kind kind = Failure::Kind::kEdge,
                                 FdoBuildInfo* info = nullptr);

/// Pivots sampled with L = eps*D/2; falls back to B = V when L < c ln n,
/// where the sampling probability would reach one anyway.
FdoOracle build_fdo_sampled(const Graph& g, const Rational& eps, double c, std::uint64_t seed,
                            Failure::Kind kind = Failure::Kind::kEdge, FdoBuildInfo* info = nullptr);

/// eps = n^(5/6) / D, rounded up to a multiple of 1/(1000 D).
Rational eps_preset_large_diameter(std::size_t n, Length diameter);

/// Whether D > n^(4/3) ln(n) / (eps sqrt(m)); advisory only.
bool large_diameter_precondition(std::size_t n, std::size_t m, Length diameter, const Rational& eps);

}  // namespace fto
