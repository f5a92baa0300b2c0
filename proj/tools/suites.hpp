#pragma once

#include <cstdint>
#include <string>

#include "ftoracle/length.hpp"
#include "ftoracle/serialize.hpp"

namespace ftocli {

struct SuiteOptions {
  std::size_t n = 0;  // 0 picks the suite default
  std::size_t m = 0;
  std::size_t graphs = 10;
  std::uint64_t seed = 0;
  fto::Rational eps{1, 2};
  std::size_t f = 0;
  double C = 2;
  std::int64_t max_weight = 1;
  fto::Rational r1{1, 1};
  std::string pivots = "hdph";  // fdo: hdph | sample
  double c = 3;
  std::string window = "tight";  // hdph: tight | verbatim
  std::size_t samples = 200;
};

/// Runs hdph | fdo | feo | dag-feo | lb | ssrp | dso. Graph k uses seed + k.
fto::RunReport run_suite(const std::string& name, const SuiteOptions& options);

struct BenchOptions {
  std::size_t n = 60;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t reps = 3;
  fto::Rational eps{1, 2};
};

/// Build and query timings plus pivot-size tables on one random graph.
fto::RunReport run_bench(const BenchOptions& options);

}  // namespace ftocli
