#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "ftoracle/graph.hpp"
#include "ftoracle/length.hpp"

namespace fto {

/// Sorted, duplicate-free copy of a failure set.
std::vector<EdgeId> normalize_failures(std::span<const EdgeId> failed);

/// Distance oracle for up to sensitivity() simultaneous edge failures.
class MultiFailureDso {
 public:
  virtual ~MultiFailureDso() = default;

  virtual Length distance(Vertex s, Vertex t, std::span<const EdgeId> failed) const = 0;
  virtual std::size_t sensitivity() const = 0;
  /// Multiplicative stretch of the answers.
  virtual double stretch() const { return 1.0; }
};

/// Exact answers from single-source runs on G - F, cached per (s, F).
class BruteForceMultiDso final : public MultiFailureDso {
 public:
  BruteForceMultiDso(Graph g, std::size_t f);

  Length distance(Vertex s, Vertex t, std::span<const EdgeId> failed) const override;
  std::size_t sensitivity() const override { return f_; }

  const Graph& graph() const { return g_; }

 private:
  Graph g_;
  std::size_t f_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Vertex, std::vector<EdgeId>>, std::vector<Length>> cache_;
};

std::shared_ptr<const BruteForceMultiDso> build_multi_dso(Graph g, std::size_t f);

struct FeoQueryStats {
  std::size_t dso_calls = 0;
};

/// Eccentricity oracle from a multi-failure DSO: the estimate for (s,F) is
/// ecc(s) + max over failed edges (x,y) of d(s,y,F).
class FeoOracle {
 public:
  /// edge_heads[e] is the head of edge e.
  FeoOracle(std::vector<Length> ecc0, std::vector<Vertex> edge_heads, std::shared_ptr<const MultiFailureDso> dso,
            double sigma, std::size_t f);

  Length query(Vertex s, std::span<const EdgeId> failed, FeoQueryStats* stats = nullptr) const;

  const std::vector<Length>& ecc0() const { return ecc0_; }
  const std::vector<Vertex>& edge_heads() const { return heads_; }
  double sigma() const { return sigma_; }
  std::size_t f() const { return f_; }

 private:
  std::vector<Length> ecc0_;
  std::vector<Vertex> heads_;
  std::shared_ptr<const MultiFailureDso> dso_;
  double sigma_;
  std::size_t f_;
};

/// ecc0 from one sweep per vertex; heads of failed edges are read from g.
FeoOracle build_feo(const Graph& g, std::shared_ptr<const MultiFailureDso> dso, double sigma, std::size_t f);

}  // namespace fto
