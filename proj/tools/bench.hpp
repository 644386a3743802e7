#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "dyncon/graph.hpp"
#include "script.hpp"

namespace dyncon::cli {

/// Uniform double in [0, 1) from the top 53 bits; unlike the standard
/// distributions this gives the same stream on every library.
double unit_draw(std::mt19937_64& rng);
/// Uniform integer in [0, bound).
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound);

/// G(n, p), redrawn until connected. Throws std::invalid_argument after
/// `max_attempts` disconnected draws.
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng, int max_attempts = 1000);

struct BenchConfig {
  Algo algo = Algo::EulerTour;
  std::size_t n = 1024;
  std::size_t k = 64;
  std::uint64_t seed = 1;
  /// Edge probability; 0 selects 2 ln n / n.
  double p = 0.0;
  int trials = 1;
  int jobs = 1;
  /// Print 0 instead of measured nanoseconds.
  bool mask_timing = false;
  bool bfs_tree = false;
};

struct BenchRow {
  std::string algo;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k_index = 0;
  std::string op;
  std::int64_t nanos = 0;
  std::size_t h_size = 0;
};

/// One trial: k deletions, each followed by one random pair query. The
/// edge engines delete random edges (tree edges only for the tree engine);
/// the layout engine deletes random vertices.
std::vector<BenchRow> bench_trial(const BenchConfig& config, int trial);

/// CSV with header algo,n,m,k_index,op,nanos,h_size. Trials run on up to
/// `jobs` threads and are printed in trial order.
void run_bench(const BenchConfig& config, std::ostream& out);

}  // namespace dyncon::cli
